#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgslab/norm_series.hpp"
#include "mgslab/params.hpp"
#include "mgslab/spectral_field.hpp"
#include "mgslab/transforms.hpp"

namespace mgslab {

struct EvolutionConfig {
  double dt = 0.01;      ///< requested step; capped by the CFL bound when adaptive_dt
  double t_end = 1.0;
  double s = 3.0;        ///< Sobolev exponent of the recorded H^s norms
  std::optional<FrequencyPlane> plane;
  bool enforce_plane = false;
  int record_every = 10; ///< steps between samples
  bool adaptive_dt = true;
  double cfl = 0.5;
  double norm_ceiling = 1e8;

  void validate() const;
};

/// Theta_0 = a sin(m x3) and the source S = kappa a m^(2 gamma) sin(m x3)
/// that makes it steady.
struct SteadyStatePair {
  SpectralField theta0;
  SpectralField source;
};

/// Requires m <= n3/3.
SteadyStatePair steady_state_pair(const Params& p, const Grid& grid);

/// Explicit part of each model (everything but the diffusion and the source).
enum class Model { Nonlinear, Linearized };

/// Time stepper for one grid and parameter set. Diffusion is integrated
/// exactly through the factor exp(-kappa |k|^(2 gamma) dt), the constant
/// source exactly through its Duhamel integral, and the remaining explicit
/// term with the exponential midpoint rule:
///
///   th_mid = E(h/2) th + phi(h/2) S + (h/2) E(h/2) A(th)
///   th_new = E(h) th   + phi(h) S   + h E(h/2) A(th_mid)
///
/// with phi(h) = (1 - E(h)) / (kappa |k|^(2 gamma)). A is
///   Nonlinear:  -P D(U . grad th),  U = M[th]
///   Linearized: -P D(a m cos(m x3) M_3 th)
/// where D is the 2/3 rule and P the zero-vertical-mean projection.
///
/// Owns FFT scratch; use one instance per thread.
class Integrator {
public:
  Integrator(const Grid& grid, const Params& p, Model model);

  const Grid& grid() const noexcept { return grid_; }
  const Params& params() const noexcept { return params_; }
  Model model() const noexcept { return model_; }

  /// The explicit term A(theta).
  SpectralField explicit_term(const SpectralField& theta);
  /// Full right-hand side: source + A(theta) - kappa (-Delta)^gamma theta.
  SpectralField rhs(const SpectralField& theta, const SpectralField* source);
  /// One step of size h, in place.
  void step(SpectralField& theta, const SpectralField* source, double h);
  /// Largest step allowed by the advective bound for the current state. The
  /// nonlinear rate also covers U(d theta).grad theta, which dominates for small
  /// perturbations of a steady state.
  double stable_dt(const SpectralField& theta, double cfl);

private:
  void explicit_term_into(const SpectralField& theta, SpectralField& out);
  void refresh_factors(double h);

  Grid grid_;
  Params params_;
  Model model_;
  FftEngine fft_;
  std::vector<double> decay_rate_;       // kappa |k|^(2 gamma)
  std::vector<double> sym1_, sym2_, sym3_;
  std::vector<unsigned char> keep_;      // inside 2/3 band and k3 != 0
  std::vector<double> cos_column_;       // a m cos(m x3), linearized model
  double factors_h_ = -1.0;
  std::vector<double> e_full_, e_half_, phi_full_, phi_half_;
  std::vector<std::vector<double>> phys_;
  std::vector<Complex> work_;
  double max_sym_[3] = {0.0, 0.0, 0.0}; // sup |M_j| over the kept band
};

/// S - U.grad Theta - kappa (-Delta)^gamma Theta, pseudo-spectral product.
SpectralField nonlinear_rhs(const SpectralField& theta, const SpectralField& source,
                            const Params& p);

/// -a m cos(m x3) M_3 theta - kappa (-Delta)^gamma theta.
SpectralField linearized_rhs(const SpectralField& theta, const Params& p);

/// One nonlinear step.
SpectralField step(const SpectralField& theta, const SpectralField& source, const Params& p,
                   double dt);

enum class RunStatus { Completed, BlowUp };

struct RunResult {
  SpectralField state;
  NormSeries series;
  RunStatus status = RunStatus::Completed;
  double final_time = 0.0;
  double failure_time = -1.0; ///< time of the failing step for BlowUp
  bool under_resolved = false;
  int steps = 0;
  std::string message;

  bool completed() const noexcept { return status == RunStatus::Completed; }
};

RunResult run_nonlinear(const SpectralField& theta0, const SpectralField& source, const Params& p,
                        const EvolutionConfig& cfg);

RunResult run_linearized(const SpectralField& theta0, const Params& p,
                         const EvolutionConfig& cfg);

struct SmallnessReport {
  bool passed = false;
  double value = 0.0;
  double margin = 0.0; ///< epsilon - value
  double alpha = 0.0;
  double epsilon = 0.0;
};

/// Default smallness level 0.01 kappa.
double default_smallness_epsilon(const Params& p);

/// ||th||^alpha ||th||_{H^s}^(1-alpha) + ||th||^alpha sup||S||^(1-alpha),
/// alpha = 1 - (5/2 + 1 - 2 gamma)/s, compared against epsilon.
/// Requires gamma >= 1/2 and s > 5/2 + 1 - 2 gamma.
SmallnessReport smallness_check(const SpectralField& theta0, double source_sup_norm,
                                const Params& p, double s, double epsilon);

} // namespace mgslab
