#include "mgslab/fitting.hpp"

#include <algorithm>
#include <cmath>

#include "mgslab/error.hpp"

namespace mgslab {

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("linear_fit: size mismatch");
  if (x.size() < 2) throw InvalidArgument("linear_fit: needs at least 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("linear_fit: x values are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.max_abs_residual =
        std::max(fit.max_abs_residual, std::abs(y[i] - fit.slope * x[i] - fit.intercept));
  }
  return fit;
}

} // namespace mgslab
