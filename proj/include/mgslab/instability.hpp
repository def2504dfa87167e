#pragma once

#include <optional>
#include <vector>

#include "mgslab/params.hpp"
#include "mgslab/spectral_field.hpp"

namespace mgslab {

/// Eigenmodes of the linearization about a sin(m x3) with horizontal
/// frequencies (j^2, j):
///   theta = exp(sigma t) sin(j^2 x1) sin(j x2) sum_p c_p sin(m p x3).
struct EigenProblem {
  int j = 1;
  Params params;

  void validate() const;
};

/// alpha_p: 1/alpha_p is the coupling between neighbouring vertical harmonics.
double alpha_coeff(int p, const EigenProblem& prob);

/// sigma_p = sigma + kappa (j^4 + j^2 + (m p)^2)^gamma.
double sigma_shift(double sigma, int p, const EigenProblem& prob);

/// Root (x - sqrt(x^2 - 4))/2 of g = 1/(x - g). Requires x > 2.
double g_closed_form(double x);

/// F_start(sigma) by backward recursion F_p = 1/(sigma_p alpha_p - F_{p+1})
/// from depth P, closed with F_{P+1} = G_P. Requires sigma_p alpha_p > 2 for
/// every p in [start, P]; throws InvalidArgument otherwise.
double f_truncated(double sigma, int start_p, int depth, const EigenProblem& prob);

/// Same recursion, but only the closure needs sigma_P alpha_P > 2; shallower
/// levels need positive partial denominators. Returns nullopt below that
/// domain. Values F_start..F_depth are written to `tail` when non-null
/// (tail[i] = F_{start+i}).
std::optional<double> continued_fraction(double sigma, int start_p, int depth,
                                         const EigenProblem& prob,
                                         std::vector<double>* tail = nullptr);

struct EigenBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// The closed-form bracket for sigma^(j) derived from the product bound
/// 1/(alpha_1 alpha_2) < sigma_1 sigma_2 < 2/(alpha_1 alpha_2).
///   lower = a mu m j^2 (j^4+j^2) / (8 Omega^2 m^2 (j^4+j^2+4m^2) + 2 mu^2 j^4)
///           - kappa (j^4+j^2+4m^2)^gamma
///   upper = 2 a mu m j^2 (j^4+j^2) / (8 Omega^2 m^2 (j^4+j^2+m^2) + 2 mu^2 j^4)
///           - kappa (j^4+j^2+m^2)^gamma
EigenBounds eigenvalue_bounds(const EigenProblem& prob);

/// 1/alpha_2 - kappa (j^4+j^2+4m^2)^gamma, which follows from the product
/// bound via sigma_2^2 > sigma_1 sigma_2 > 1/(alpha_1 alpha_2) > 1/alpha_2^2.
/// Unlike eigenvalue_bounds().lower it keeps the (2m)^2 of alpha_2.
double corrected_lower_bound(const EigenProblem& prob);

/// True iff 1/(alpha_1 alpha_2) < sigma_1 sigma_2 < 2/(alpha_1 alpha_2).
bool satisfies_product_bound(double sigma, const EigenProblem& prob);

struct CoefficientSequence {
  std::vector<double> eta;        ///< eta[0] = eta_2 ... eta[P-2] = eta_P
  std::vector<double> c;          ///< c[0] = c_1 ... c[P-1] = c_P (may underflow to 0)
  std::vector<double> log_abs_c;  ///< log|c_p|
  std::vector<int> sign_c;        ///< sign of c_p

  int depth() const noexcept { return static_cast<int>(c.size()); }
};

/// eta_p = -F_p(sigma), c_1 = alpha_1, c_p = alpha_p eta_p ... eta_2.
CoefficientSequence coefficient_sequence(double sigma, int depth, const EigenProblem& prob);

/// Relative residuals of the three-term recursion, divided by |c_p| sigma_p:
/// entry 0 is the p = 1 relation, entry p-1 the relation at p (2 <= p <= P-1).
std::vector<double> recursion_residuals(double sigma, const CoefficientSequence& seq,
                                        const EigenProblem& prob);

enum class RootSign {
  Positive, ///< unstable eigenvalues only (NoUnstableEigenvalue otherwise)
  Any,      ///< the leading root of the characteristic equation, any sign
};

struct SolveOptions {
  RootSign sign = RootSign::Positive;
  int depth = 40;
  int max_expansions = 60;
  double residual_tol = 1e-10;
  double truncation_tol = 1e-10;
};

struct EigenResult {
  double sigma = 0.0;
  double lower = 0.0;  ///< eigenvalue_bounds(prob).lower
  double upper = 0.0;  ///< eigenvalue_bounds(prob).upper
  std::vector<double> c;
  std::vector<double> log_abs_c;
  std::vector<int> sign_c;
  std::vector<double> eta;
  int truncation_p = 0;
  double residual = 0.0;     ///< |F_2(sigma) - sigma_1 alpha_1|
  double depth_shift = 0.0;  ///< |sigma(2P) - sigma(P)| / |sigma(P)|
  bool analyzed_regime = false; ///< sigma_2 alpha_2 > 2
  int bisection_steps = 0;

  bool inside_bounds() const noexcept { return lower < sigma && sigma < upper; }
};

/// Solves F_2(sigma) = sigma_1 alpha_1 by bisection, bracket initialized from
/// eigenvalue_bounds and expanded geometrically. Throws NoUnstableEigenvalue
/// or TruncationNotConverged.
EigenResult solve_eigenvalue(const EigenProblem& prob, const SolveOptions& opts = {});

/// Characteristic residual F_2(sigma) - sigma_1 alpha_1 (nullopt below the
/// continued-fraction domain).
std::optional<double> characteristic_residual(double sigma, const EigenProblem& prob,
                                              int depth = 40);

/// Number of leading coefficients with |c_p| >= rel_cutoff |c_1|.
int significant_terms(const EigenResult& result, double rel_cutoff = 1e-16);

/// sin(j^2 x1) sin(j x2) sum_p c_p sin(m p x3), normalized to unit L2.
/// Requires j^2 <= n1/3, j <= n2/3, m P_used <= n3/3.
SpectralField synthesize_eigenmode(const EigenResult& result, const EigenProblem& prob,
                                   const Grid& grid);

/// The growth floor C*: sigma^(j) >= j^2 C* for j >= j0 when C* > 0.
///   gamma < 1/2 (and > 1/2):
///     a mu m (j0^4+j0^2) / (8 Omega^2 m^2 (j0^4+j0^2+4m^2) + 2 mu^2 j0^4)
///       - (kappa/j0^2) (j0^4+j0^2+4m^2)^gamma
///   gamma = 1/2:  a mu m / (32 Omega^2 m^2 + 2 mu^2) - kappa
double growth_constant(int j0, const Params& p);

/// kappa below which growth_constant is positive at gamma = 1/2.
double critical_kappa_half(const Params& p);

} // namespace mgslab
