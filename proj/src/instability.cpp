#include "mgslab/instability.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mgslab/error.hpp"

namespace mgslab {

namespace {

double horizontal(const EigenProblem& prob) {
  const double j = prob.j;
  return j * j * j * j + j * j; // j^4 + j^2
}

double diffusion_rate(int p, const EigenProblem& prob) {
  const double mp = static_cast<double>(prob.params.m) * p;
  return prob.params.kappa * std::pow(horizontal(prob) + mp * mp, prob.params.gamma);
}

} // namespace

void EigenProblem::validate() const {
  if (j < 1) throw InvalidArgument("eigenproblem needs j >= 1");
  params.validate();
  if (!(params.a > 0.0)) throw InvalidArgument("eigenproblem needs a > 0");
}

double alpha_coeff(int p, const EigenProblem& prob) {
  if (p < 1) throw InvalidArgument("alpha_p needs p >= 1");
  const Params& q = prob.params;
  const double j2 = static_cast<double>(prob.j) * prob.j;
  const double h = horizontal(prob);
  const double mp = static_cast<double>(q.m) * p;
  const double num = 8.0 * q.omega * q.omega * mp * mp * (h + mp * mp) + 2.0 * q.mu * q.mu * j2 * j2;
  const double den = q.a * q.mu * q.m * j2 * h;
  return num / den;
}

double sigma_shift(double sigma, int p, const EigenProblem& prob) {
  if (p < 1) throw InvalidArgument("sigma_p needs p >= 1");
  return sigma + diffusion_rate(p, prob);
}

double g_closed_form(double x) {
  if (!(x > 2.0)) {
    std::ostringstream msg;
    msg << "g_closed_form needs x > 2 (got " << x << ")";
    throw InvalidArgument(msg.str());
  }
  // 2/(x + sqrt(x^2-4)) equals (x - sqrt(x^2-4))/2 without the cancellation.
  return 2.0 / (x + std::sqrt((x - 2.0) * (x + 2.0)));
}

double f_truncated(double sigma, int start_p, int depth, const EigenProblem& prob) {
  if (start_p < 1 || depth < start_p) throw InvalidArgument("f_truncated needs 1 <= start <= P");
  for (int p = start_p; p <= depth; ++p) {
    const double x = sigma_shift(sigma, p, prob) * alpha_coeff(p, prob);
    if (!(x > 2.0)) {
      std::ostringstream msg;
      msg << "sigma_p alpha_p = " << x << " <= 2 at p = " << p
          << ": outside the analyzed continued-fraction regime";
      throw InvalidArgument(msg.str());
    }
  }
  double f = g_closed_form(sigma_shift(sigma, depth, prob) * alpha_coeff(depth, prob));
  for (int p = depth; p >= start_p; --p) {
    f = 1.0 / (sigma_shift(sigma, p, prob) * alpha_coeff(p, prob) - f);
  }
  return f;
}

std::optional<double> continued_fraction(double sigma, int start_p, int depth,
                                         const EigenProblem& prob, std::vector<double>* tail) {
  if (start_p < 1 || depth < start_p) {
    throw InvalidArgument("continued_fraction needs 1 <= start <= P");
  }
  const double x_tail = sigma_shift(sigma, depth, prob) * alpha_coeff(depth, prob);
  if (!(x_tail > 2.0)) return std::nullopt;
  if (tail) tail->assign(static_cast<std::size_t>(depth - start_p + 1), 0.0);
  double f = g_closed_form(x_tail);
  for (int p = depth; p >= start_p; --p) {
    const double d = sigma_shift(sigma, p, prob) * alpha_coeff(p, prob) - f;
    if (!(d > 0.0)) return std::nullopt;
    f = 1.0 / d;
    if (tail) (*tail)[static_cast<std::size_t>(p - start_p)] = f;
  }
  return f;
}

EigenBounds eigenvalue_bounds(const EigenProblem& prob) {
  const Params& q = prob.params;
  const double j2 = static_cast<double>(prob.j) * prob.j;
  const double h = horizontal(prob);
  const double m2 = static_cast<double>(q.m) * q.m;
  const double w2 = q.omega * q.omega;
  const double gain = q.a * q.mu * q.m * j2 * h;
  EigenBounds b;
  b.lower = gain / (8.0 * w2 * m2 * (h + 4.0 * m2) + 2.0 * q.mu * q.mu * j2 * j2) -
            q.kappa * std::pow(h + 4.0 * m2, q.gamma);
  b.upper = 2.0 * gain / (8.0 * w2 * m2 * (h + m2) + 2.0 * q.mu * q.mu * j2 * j2) -
            q.kappa * std::pow(h + m2, q.gamma);
  return b;
}

double corrected_lower_bound(const EigenProblem& prob) {
  return 1.0 / alpha_coeff(2, prob) - diffusion_rate(2, prob);
}

bool satisfies_product_bound(double sigma, const EigenProblem& prob) {
  const double prod = sigma_shift(sigma, 1, prob) * sigma_shift(sigma, 2, prob);
  const double base = 1.0 / (alpha_coeff(1, prob) * alpha_coeff(2, prob));
  return base < prod && prod < 2.0 * base;
}

std::optional<double> characteristic_residual(double sigma, const EigenProblem& prob, int depth) {
  const auto f2 = continued_fraction(sigma, 2, depth, prob);
  if (!f2) return std::nullopt;
  return *f2 - sigma_shift(sigma, 1, prob) * alpha_coeff(1, prob);
}

CoefficientSequence coefficient_sequence(double sigma, int depth, const EigenProblem& prob) {
  if (depth < 2) throw InvalidArgument("coefficient sequence needs P >= 2");
  std::vector<double> f;
  if (!continued_fraction(sigma, 2, depth, prob, &f)) {
    std::ostringstream msg;
    msg << "sigma = " << sigma << " lies outside the continued-fraction domain";
    throw InvalidArgument(msg.str());
  }
  CoefficientSequence seq;
  seq.eta.resize(f.size());
  seq.c.resize(static_cast<std::size_t>(depth));
  seq.log_abs_c.resize(static_cast<std::size_t>(depth));
  seq.sign_c.resize(static_cast<std::size_t>(depth));
  double log_prod = 0.0; // log |eta_2 ... eta_p|
  for (int p = 1; p <= depth; ++p) {
    const auto i = static_cast<std::size_t>(p - 1);
    if (p >= 2) {
      seq.eta[i - 1] = -f[i - 1];
      log_prod += std::log(f[i - 1]);
    }
    seq.log_abs_c[i] = std::log(alpha_coeff(p, prob)) + log_prod;
    seq.sign_c[i] = (p % 2 == 1) ? 1 : -1;
    seq.c[i] = seq.sign_c[i] * std::exp(seq.log_abs_c[i]);
  }
  return seq;
}

std::vector<double> recursion_residuals(double sigma, const CoefficientSequence& seq,
                                        const EigenProblem& prob) {
  const int depth = seq.depth();
  std::vector<double> out;
  if (depth < 2) return out;
  // Everything is scaled by |c_p| through log differences so that deep
  // coefficients that underflow in linear scale still get checked.
  auto scaled = [&](int q, int p) {
    const auto iq = static_cast<std::size_t>(q - 1), ip = static_cast<std::size_t>(p - 1);
    return seq.sign_c[iq] * std::exp(seq.log_abs_c[iq] - seq.log_abs_c[ip]);
  };
  for (int p = 1; p < depth; ++p) {
    const double sp = sigma_shift(sigma, p, prob);
    double r = sp * seq.sign_c[static_cast<std::size_t>(p - 1)] +
               scaled(p + 1, p) / alpha_coeff(p + 1, prob);
    if (p >= 2) r += scaled(p - 1, p) / alpha_coeff(p - 1, prob);
    // 1e-300 mirrors the |c_p| sigma_p floor of the residual tolerance.
    out.push_back(std::abs(r) / std::max(std::abs(sp), 1e-300));
  }
  return out;
}

namespace {

struct Root {
  double sigma = 0.0;
  int steps = 0;
};

Root bracket_and_bisect(const EigenProblem& prob, const SolveOptions& opts) {
  const int depth = opts.depth;
  auto residual = [&](double s) {
    const auto r = characteristic_residual(s, prob, depth);
    // Below the continued-fraction domain the root lies further up.
    return r ? *r : std::numeric_limits<double>::infinity();
  };
  const EigenBounds b = eigenvalue_bounds(prob);
  const bool positive = opts.sign == RootSign::Positive;
  double lo = b.lower, hi = b.upper;
  if (positive) lo = std::max(lo, 0.0);
  const double scale = std::max({std::abs(b.lower), std::abs(b.upper), 1e-3});
  if (!(hi > lo)) hi = lo + scale;

  double r_hi = residual(hi);
  for (int n = 0; n < opts.max_expansions && r_hi > 0.0; ++n) {
    hi = hi + 2.0 * (hi - lo);
    r_hi = residual(hi);
  }
  double r_lo = residual(lo);
  for (int n = 0; n < opts.max_expansions && r_lo < 0.0; ++n) {
    if (positive) {
      if (lo == 0.0) break;
      lo = (n + 1 == opts.max_expansions) ? 0.0 : 0.5 * lo;
    } else {
      lo = lo - 2.0 * (hi - lo);
    }
    r_lo = residual(lo);
  }
  if (positive && r_lo < 0.0 && lo != 0.0) {
    lo = 0.0;
    r_lo = residual(lo);
  }
  if (!(r_lo >= 0.0) || !(r_hi <= 0.0)) {
    std::ostringstream msg;
    msg << "no sign change of the characteristic residual for j = " << prob.j << " in ["
        << lo << ", " << hi << "]" << (positive ? " with sigma > 0" : "");
    throw NoUnstableEigenvalue(msg.str());
  }

  Root root;
  if (r_lo == 0.0) {
    root.sigma = lo;
  } else if (r_hi == 0.0) {
    root.sigma = hi;
  } else {
    for (; root.steps < 400; ++root.steps) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double r = residual(mid);
      if (r == 0.0) {
        lo = hi = mid;
        break;
      }
      (r > 0.0 ? lo : hi) = mid;
    }
    // Pick the endpoint with the smaller finite residual.
    const double rl = residual(lo), rh = residual(hi);
    root.sigma = (std::isfinite(rl) && std::abs(rl) < std::abs(rh)) ? lo : hi;
  }
  if (positive && !(root.sigma > 0.0)) {
    std::ostringstream msg;
    msg << "characteristic root for j = " << prob.j << " is not positive";
    throw NoUnstableEigenvalue(msg.str());
  }
  return root;
}

} // namespace

EigenResult solve_eigenvalue(const EigenProblem& prob, const SolveOptions& opts) {
  prob.validate();
  if (opts.depth < 3) throw InvalidArgument("continued-fraction depth must be >= 3");
  const Root root = bracket_and_bisect(prob, opts);

  SolveOptions doubled = opts;
  doubled.depth = 2 * opts.depth;
  const Root deep = bracket_and_bisect(prob, doubled);

  EigenResult r;
  r.sigma = root.sigma;
  r.bisection_steps = root.steps;
  const EigenBounds b = eigenvalue_bounds(prob);
  r.lower = b.lower;
  r.upper = b.upper;
  r.truncation_p = opts.depth;
  r.depth_shift = std::abs(deep.sigma - root.sigma) /
                  std::max(std::abs(root.sigma), std::numeric_limits<double>::min());
  if (r.depth_shift > opts.truncation_tol) {
    std::ostringstream msg;
    msg << "doubling the continued-fraction depth moved sigma by " << r.depth_shift
        << " (relative)";
    throw TruncationNotConverged(msg.str());
  }
  const double target = sigma_shift(r.sigma, 1, prob) * alpha_coeff(1, prob);
  r.residual = std::abs(*characteristic_residual(r.sigma, prob, opts.depth));
  if (r.residual > opts.residual_tol * std::abs(target)) {
    std::ostringstream msg;
    msg << "characteristic residual " << r.residual << " exceeds tolerance";
    throw Error(msg.str());
  }
  r.analyzed_regime = sigma_shift(r.sigma, 2, prob) * alpha_coeff(2, prob) > 2.0;

  CoefficientSequence seq = coefficient_sequence(r.sigma, opts.depth, prob);
  r.c = std::move(seq.c);
  r.log_abs_c = std::move(seq.log_abs_c);
  r.sign_c = std::move(seq.sign_c);
  r.eta = std::move(seq.eta);
  return r;
}

int significant_terms(const EigenResult& result, double rel_cutoff) {
  if (result.log_abs_c.empty()) return 0;
  const double floor = result.log_abs_c.front() + std::log(rel_cutoff);
  int n = 0;
  for (double v : result.log_abs_c) {
    if (v < floor) break;
    ++n;
  }
  return n;
}

SpectralField synthesize_eigenmode(const EigenResult& result, const EigenProblem& prob,
                                   const Grid& grid) {
  const int used = significant_terms(result);
  const std::int64_t j = prob.j, m = prob.params.m;
  if (3 * j * j > grid.n1() || 3 * j > grid.n2() || 3 * m * used > grid.n3()) {
    std::ostringstream msg;
    msg << "eigenmode j = " << j << " with " << used << " vertical harmonics (m = " << m
        << ") is not resolvable on a " << grid.n1() << "x" << grid.n2() << "x" << grid.n3()
        << " grid";
    throw InvalidArgument(msg.str());
  }
  SpectralField f(grid);
  // sin a sin b sin c = sum over sign triples s of s1 s2 s3 (i/8) e^{i(s1 a + s2 b + s3 c)}
  double energy = 0.0;
  for (int p = 1; p <= used; ++p) {
    const double cp = result.c[static_cast<std::size_t>(p - 1)];
    energy += cp * cp / 8.0;
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        f.set_pair(Wavevector{s1 * j * j, s2 * j, m * p}, Complex(0.0, s1 * s2 * cp / 8.0));
      }
    }
  }
  const double norm = std::sqrt(energy);
  if (!(norm > 0.0)) throw InvalidArgument("eigenmode has zero norm");
  f *= 1.0 / norm;
  return f;
}

double growth_constant(int j0, const Params& p) {
  if (j0 < 1) throw InvalidArgument("growth constant needs j0 >= 1");
  p.validate();
  if (p.gamma == 0.5) return critical_kappa_half(p) - p.kappa;
  const double j2 = static_cast<double>(j0) * j0;
  const double h = j2 * j2 + j2;
  const double m2 = static_cast<double>(p.m) * p.m;
  return p.a * p.mu * p.m * h /
             (8.0 * p.omega * p.omega * m2 * (h + 4.0 * m2) + 2.0 * p.mu * p.mu * j2 * j2) -
         (p.kappa / j2) * std::pow(h + 4.0 * m2, p.gamma);
}

double critical_kappa_half(const Params& p) {
  return p.a * p.mu * p.m / (32.0 * p.omega * p.omega * p.m * p.m + 2.0 * p.mu * p.mu);
}

} // namespace mgslab
