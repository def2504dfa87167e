#include "mgslab/params.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "mgslab/error.hpp"

namespace mgslab {

Params Params::from_field(double omega, double beta, double eta, double kappa, double gamma,
                          double a, int m) {
  Params p;
  p.omega = omega;
  p.beta = beta;
  p.eta = eta;
  p.mu = beta * beta / eta;
  p.kappa = kappa;
  p.gamma = gamma;
  p.a = a;
  p.m = m;
  p.validate();
  return p;
}

Params Params::from_mu(double omega, double mu, double kappa, double gamma, double a, int m) {
  Params p;
  p.omega = omega;
  p.eta = 1.0;
  p.beta = std::sqrt(mu);
  p.mu = mu;
  p.kappa = kappa;
  p.gamma = gamma;
  p.a = a;
  p.m = m;
  p.validate();
  return p;
}

void Params::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidArgument(std::string(name) + " must be positive and finite");
    }
  };
  positive(omega, "omega");
  positive(beta, "beta");
  positive(eta, "eta");
  positive(mu, "mu");
  if (!(a >= 0.0) || !std::isfinite(a)) throw InvalidArgument("a must be nonnegative and finite");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw InvalidArgument("kappa must be nonnegative and finite");
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidArgument("gamma must lie in (0,1]");
  if (m < 1) throw InvalidArgument("m must be a positive integer");
  const double derived = beta * beta / eta;
  if (std::abs(derived - mu) > 1e-12 * mu) {
    throw InvalidArgument("mu must equal beta^2/eta");
  }
}

FrequencyPlane::FrequencyPlane(std::int64_t j1, std::int64_t j2) : j1_(j1), j2_(j2) {
  if (j1 == 0) throw InvalidArgument("plane j1 must be nonzero");
  if (std::gcd(j1, j2) != 1) {
    throw InvalidArgument("plane (j1, j2) must be coprime");
  }
}

std::string FrequencyPlane::to_string() const {
  std::ostringstream os;
  os << j2_ << "/" << j1_;
  return os.str();
}

} // namespace mgslab
