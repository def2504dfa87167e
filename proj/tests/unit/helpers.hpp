#pragma once

#include <cmath>
#include <random>

#include "mgslab/spectral_field.hpp"

namespace testing {

/// Random Hermitian field filling every retained mode (Gaussian coefficients).
/// With `vertical_mean` false the k3 = 0 plane is left empty.
inline mgslab::SpectralField random_hermitian(const mgslab::Grid& grid, unsigned seed,
                                              bool vertical_mean = true) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  mgslab::SpectralField f(grid);
  f.for_each_mode([&](const mgslab::Wavevector& k, mgslab::Complex& c, double) {
    if (k.k3 == 0 && !vertical_mean) return;
    c = {gauss(rng), gauss(rng)};
  });
  f.enforce_hermitian();
  return f;
}

/// Smooth band-limited random field: Gaussian coefficients damped by
/// exp(-|k|^2 / 8), zero on k3 = 0, inside |k_j| <= box.
inline mgslab::SpectralField random_smooth(const mgslab::Grid& grid, unsigned seed, int box,
                                           double scale) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  mgslab::SpectralField f(grid);
  for (int k1 = -box; k1 <= box; ++k1) {
    for (int k2 = -box; k2 <= box; ++k2) {
      for (int k3 = 1; k3 <= box; ++k3) {
        const mgslab::Wavevector k{k1, k2, k3};
        const double damp = scale * std::exp(-static_cast<double>(k.norm2()) / 8.0);
        f.set_pair(k, {damp * gauss(rng), damp * gauss(rng)});
      }
    }
  }
  return f;
}

inline double max_abs_diff(const mgslab::SpectralField& a, const mgslab::SpectralField& b) {
  double m = 0.0;
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

} // namespace testing
