#pragma once

#include <cstdint>
#include <optional>

#include "mgslab/params.hpp"
#include "mgslab/spectral_field.hpp"

namespace mgslab {

/// Seeded smooth data: modes with |k_j| <= box (capped at the dealiasing
/// cutoff), k3 != 0, amplitude |k|^-4 and uniform random phase, scaled to the
/// requested L2 norm. Modes are visited in a fixed order so the same seed and
/// box give identical coefficients on any grid that holds the box.
struct SmoothData {
  std::uint64_t seed = 1;
  double l2 = 1e-2;
  int box = 4;
  std::optional<FrequencyPlane> plane; ///< keep only modes on this plane
};

SpectralField random_smooth_field(const Grid& grid, const SmoothData& data);

} // namespace mgslab
