#include "mgslab/spectral_field.hpp"

#include "mgslab/error.hpp"

namespace mgslab {

SpectralField::SpectralField(Grid grid) : grid_(grid), coeffs_(grid.spectral_size()) {}

Complex SpectralField::coeff(const Wavevector& k) const {
  if (!grid_.retains(k)) return {};
  // The Nyquist index n3/2 is stored for k3 = +n3/2 only.
  if (k.k3 < 0) {
    // -k may carry a -n/2 component; index_of folds it onto the stored +n/2.
    const Wavevector mk = -k;
    return std::conj(coeffs_[index(Grid::index_of(mk.k1, grid_.n1()),
                                   Grid::index_of(mk.k2, grid_.n2()), static_cast<int>(mk.k3))]);
  }
  const int i1 = Grid::index_of(k.k1, grid_.n1());
  const int i2 = Grid::index_of(k.k2, grid_.n2());
  return coeffs_[index(i1, i2, static_cast<int>(k.k3))];
}

void SpectralField::set_pair(const Wavevector& k, Complex v) {
  if (!grid_.retains(k)) {
    throw InvalidArgument("wavevector outside the retained lattice");
  }
  Wavevector kk = k;
  if (kk.k3 < 0) {
    kk = -kk;
    v = std::conj(v);
  }
  const int n1 = grid_.n1(), n2 = grid_.n2();
  const int i1 = Grid::index_of(kk.k1, n1);
  const int i2 = Grid::index_of(kk.k2, n2);
  const int i3 = static_cast<int>(kk.k3);
  if (i3 == 0 || 2 * i3 == grid_.n3()) {
    const int j1 = (n1 - i1) % n1;
    const int j2 = (n2 - i2) % n2;
    if (j1 == i1 && j2 == i2) {
      coeffs_[index(i1, i2, i3)] = Complex(v.real(), 0.0);
      return;
    }
    coeffs_[index(j1, j2, i3)] = std::conj(v);
  }
  coeffs_[index(i1, i2, i3)] = v;
}

void SpectralField::enforce_hermitian() {
  const int n1 = grid_.n1(), n2 = grid_.n2();
  for (int i3 : {0, grid_.n3() / 2}) {
    for (int i1 = 0; i1 < n1; ++i1) {
      const int j1 = (n1 - i1) % n1;
      for (int i2 = 0; i2 < n2; ++i2) {
        const int j2 = (n2 - i2) % n2;
        const std::size_t a = index(i1, i2, i3), b = index(j1, j2, i3);
        if (a > b) continue;
        if (a == b) {
          coeffs_[a] = Complex(coeffs_[a].real(), 0.0);
          continue;
        }
        const Complex avg = 0.5 * (coeffs_[a] + std::conj(coeffs_[b]));
        coeffs_[a] = avg;
        coeffs_[b] = std::conj(avg);
      }
    }
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  if (!(o.grid_ == grid_)) throw InvalidArgument("grid mismatch in field addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  if (!(o.grid_ == grid_)) throw InvalidArgument("grid mismatch in field subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PhysicalField::PhysicalField(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.physical_size()) {
    throw InvalidArgument("physical field has " + std::to_string(values.size()) +
                          " samples, grid needs " + std::to_string(grid.physical_size()));
  }
}

} // namespace mgslab
