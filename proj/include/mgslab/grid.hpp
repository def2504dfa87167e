#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace mgslab {

/// Integer wavevector on Z^3.
struct Wavevector {
  std::int64_t k1 = 0, k2 = 0, k3 = 0;

  constexpr Wavevector operator-() const { return {-k1, -k2, -k3}; }
  constexpr std::int64_t norm2() const { return k1 * k1 + k2 * k2 + k3 * k3; }
  friend constexpr bool operator==(const Wavevector&, const Wavevector&) = default;
};

/// Collocation grid on the 2*pi-periodic box. Axis j retains wavenumbers
/// -n_j/2+1 .. n_j/2.
class Grid {
public:
  Grid(int n1, int n2, int n3);
  explicit Grid(int n) : Grid(n, n, n) {}

  int n1() const noexcept { return n_[0]; }
  int n2() const noexcept { return n_[1]; }
  int n3() const noexcept { return n_[2]; }
  int n(int axis) const noexcept { return n_[static_cast<std::size_t>(axis)]; }

  /// Last stored index along axis 3 in the half-complex layout (n3/2).
  int n3_half() const noexcept { return n_[2] / 2 + 1; }

  std::size_t physical_size() const noexcept {
    return static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  }
  std::size_t spectral_size() const noexcept {
    return static_cast<std::size_t>(n_[0]) * n_[1] * n3_half();
  }

  /// Largest |k_j| kept by the 2/3 rule on axis j.
  int dealias_cutoff(int axis) const noexcept { return n(axis) / 3; }

  /// Signed wavenumber stored at index i on an axis of n points.
  static constexpr int wavenumber(int i, int n) noexcept { return i <= n / 2 ? i : i - n; }
  /// Index storing wavenumber k on an axis of n points (-n/2 <= k <= n/2).
  static constexpr int index_of(std::int64_t k, int n) noexcept {
    return static_cast<int>(k >= 0 ? k : k + n);
  }

  bool retains(const Wavevector& k) const noexcept;

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  std::array<int, 3> n_;
};

} // namespace mgslab
