#pragma once

#include <span>

#include "mgslab/spectral_field.hpp"

namespace mgslab {

/// Inverse transform: samples of sum_k coeff(k) exp(i k.x) at collocation points.
PhysicalField to_physical(const SpectralField& f);

/// Forward transform (inverse of to_physical). Hermitian symmetry of the
/// result is enforced exactly.
SpectralField to_spectral(const PhysicalField& values);
SpectralField to_spectral(std::span<const double> values, const Grid& grid);

/// Reusable transform pair for one grid. Owns scratch buffers, so one
/// instance must not be shared between threads; separate instances may run
/// concurrently.
class FftEngine {
public:
  explicit FftEngine(const Grid& grid);
  ~FftEngine();
  FftEngine(const FftEngine&) = delete;
  FftEngine& operator=(const FftEngine&) = delete;

  const Grid& grid() const noexcept { return grid_; }

  /// out must have grid.physical_size() entries. `in` is not modified.
  void inverse(std::span<const Complex> in, std::span<double> out);
  /// out must have grid.spectral_size() entries; result is normalized so
  /// inverse(forward(x)) == x. Hermitian planes are not symmetrized.
  void forward(std::span<const double> in, std::span<Complex> out);

private:
  Grid grid_;
  struct Plans;
  const Plans* plans_;
  std::vector<Complex> scratch_;
};

} // namespace mgslab
