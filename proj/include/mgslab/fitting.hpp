#pragma once

#include <span>

namespace mgslab {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
};

/// Ordinary least squares y ~ slope x + intercept. Needs >= 2 distinct x.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

} // namespace mgslab
