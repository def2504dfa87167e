#pragma once

#include <cstdint>
#include <string>

#include "mgslab/grid.hpp"

namespace mgslab {

/// Physical constants of the fractionally diffusive MG equation and the
/// steady state Theta_0 = a sin(m x3).
struct Params {
  double omega = 1.0; ///< rotation rate
  double beta = 1.0;  ///< mean magnetic field strength
  double eta = 1.0;   ///< magnetic diffusivity
  double mu = 1.0;    ///< beta^2 / eta
  double kappa = 0.1; ///< thermal diffusivity (0 allowed: the non-diffusive limit)
  double gamma = 0.25;
  double a = 1.0;     ///< 0 switches off the steady state
  int m = 1;

  /// Builds from beta and eta; mu is derived.
  static Params from_field(double omega, double beta, double eta, double kappa, double gamma,
                           double a = 1.0, int m = 1);
  /// Builds from mu directly (eta = 1, beta = sqrt(mu)).
  static Params from_mu(double omega, double mu, double kappa, double gamma, double a = 1.0,
                        int m = 1);

  /// Throws InvalidArgument naming the violated constraint.
  void validate() const;
};

/// The frequency plane P_q = { k : k2 = q k1 }, q = j2/j1 kept as a reduced
/// integer pair so membership is exact.
class FrequencyPlane {
public:
  FrequencyPlane(std::int64_t j1, std::int64_t j2);

  std::int64_t j1() const noexcept { return j1_; }
  std::int64_t j2() const noexcept { return j2_; }
  double q() const noexcept { return static_cast<double>(j2_) / static_cast<double>(j1_); }

  bool contains(const Wavevector& k) const noexcept { return k.k2 * j1_ == k.k1 * j2_; }

  std::string to_string() const;

private:
  std::int64_t j1_, j2_;
};

} // namespace mgslab
