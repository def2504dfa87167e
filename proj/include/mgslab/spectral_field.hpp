#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mgslab/grid.hpp"

namespace mgslab {

using Complex = std::complex<double>;

/// Fourier coefficients of a real scalar on the torus, with
///   f(x) = sum_k coeff(k) exp(i k.x).
///
/// Normalization: the L2 norm used throughout the library is the
/// volume-averaged one, ||f||^2 = (2 pi)^-3 \int |f|^2 = sum_k |coeff(k)|^2,
/// so Parseval holds with constant 1.
///
/// Storage is the half-complex layout of a real-to-complex transform:
/// indices (i1, i2, i3) with 0 <= i3 <= n3/2, row-major. Modes with k3 < 0 are
/// implied by Hermitian symmetry coeff(-k) = conj(coeff(k)).
class SpectralField {
public:
  explicit SpectralField(Grid grid);

  const Grid& grid() const noexcept { return grid_; }

  std::span<const Complex> data() const noexcept { return coeffs_; }
  std::span<Complex> data() noexcept { return coeffs_; }

  std::size_t index(int i1, int i2, int i3) const noexcept {
    return (static_cast<std::size_t>(i1) * grid_.n2() + i2) * grid_.n3_half() + i3;
  }

  /// Coefficient at any retained k (k3 of either sign). Zero for k outside
  /// the retained lattice.
  Complex coeff(const Wavevector& k) const;

  /// Set coeff(k) = v and coeff(-k) = conj(v). On self-conjugate lattice
  /// points only the real part of v is kept.
  void set_pair(const Wavevector& k, Complex v);

  /// Re-impose Hermitian symmetry on the k3 = 0 and k3 = n3/2 planes, the
  /// only planes where both k and -k are stored.
  void enforce_hermitian();

  /// Multiplicity of a stored half-space entry when summing over all of Z^3.
  double weight(int i3) const noexcept {
    return (i3 == 0 || 2 * i3 == grid_.n3()) ? 1.0 : 2.0;
  }

  /// Calls fn(Wavevector, Complex&, weight) for every stored entry.
  template <class Fn>
  void for_each_mode(Fn&& fn) {
    visit(*this, fn);
  }
  template <class Fn>
  void for_each_mode(Fn&& fn) const {
    visit(*this, fn);
  }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(SpectralField a, double s) { return a *= s; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

private:
  template <class Self, class Fn>
  static void visit(Self& self, Fn& fn) {
    const Grid& g = self.grid_;
    std::size_t idx = 0;
    for (int i1 = 0; i1 < g.n1(); ++i1) {
      const std::int64_t k1 = Grid::wavenumber(i1, g.n1());
      for (int i2 = 0; i2 < g.n2(); ++i2) {
        const std::int64_t k2 = Grid::wavenumber(i2, g.n2());
        for (int i3 = 0; i3 < g.n3_half(); ++i3, ++idx) {
          fn(Wavevector{k1, k2, i3}, self.coeffs_[idx], self.weight(i3));
        }
      }
    }
  }

  Grid grid_;
  std::vector<Complex> coeffs_;
};

/// Real samples on the n1 x n2 x n3 collocation grid x_j = 2 pi i_j / n_j,
/// row-major with i3 fastest.
struct PhysicalField {
  Grid grid;
  std::vector<double> values;

  explicit PhysicalField(Grid g) : grid(g), values(g.physical_size(), 0.0) {}
  PhysicalField(Grid g, std::vector<double> v);

  std::size_t index(int i1, int i2, int i3) const noexcept {
    return (static_cast<std::size_t>(i1) * grid.n2() + i2) * grid.n3() + i3;
  }
};

} // namespace mgslab
