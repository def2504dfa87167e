#include "mgslab/random_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mgslab/error.hpp"
#include "mgslab/spectral_ops.hpp"

namespace mgslab {

SpectralField random_smooth_field(const Grid& grid, const SmoothData& data) {
  if (data.box < 1) throw InvalidArgument("smooth data box must be >= 1");
  if (!(data.l2 >= 0.0) || !std::isfinite(data.l2)) {
    throw InvalidArgument("smooth data L2 norm must be nonnegative");
  }
  const std::int64_t b1 = std::min<std::int64_t>(data.box, grid.dealias_cutoff(0));
  const std::int64_t b2 = std::min<std::int64_t>(data.box, grid.dealias_cutoff(1));
  const std::int64_t b3 = std::min<std::int64_t>(data.box, grid.dealias_cutoff(2));

  std::mt19937_64 rng(data.seed);
  SpectralField f(grid);
  for (std::int64_t k1 = -data.box; k1 <= data.box; ++k1) {
    for (std::int64_t k2 = -data.box; k2 <= data.box; ++k2) {
      for (std::int64_t k3 = 1; k3 <= data.box; ++k3) {
        // Draw for every box mode so the stream does not depend on the grid.
        const double phase = static_cast<double>(rng() >> 11) * 0x1p-53 * 2.0 * std::numbers::pi;
        if (std::llabs(k1) > b1 || std::llabs(k2) > b2 || k3 > b3) continue;
        const Wavevector k{k1, k2, k3};
        if (data.plane && !data.plane->contains(k)) continue;
        const double amp = std::pow(static_cast<double>(k.norm2()), -2.0);
        f.set_pair(k, std::polar(amp, phase));
      }
    }
  }
  const double norm = l2_norm(f);
  if (norm > 0.0) f *= data.l2 / norm;
  return f;
}

} // namespace mgslab
