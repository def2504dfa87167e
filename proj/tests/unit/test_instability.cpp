#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <doctest.h>

#include "mgslab/error.hpp"
#include "mgslab/instability.hpp"
#include "mgslab/spectral_ops.hpp"

using namespace mgslab;

namespace {

EigenProblem problem(int j, double kappa, double gamma, double a = 1.0, int m = 1) {
  Params p;
  p.kappa = kappa;
  p.gamma = gamma;
  p.a = a;
  p.m = m;
  return {j, p};
}

double diffusion(int p, const EigenProblem& prob) { return sigma_shift(0.0, p, prob); }

// Leading eigenvalue of the vertical coupling truncated to n harmonics,
// symmetrized by c_p = sqrt(alpha_p) v_p.
double tridiagonal_top(const EigenProblem& prob, int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int p = 1; p <= n; ++p) {
    a(p - 1, p - 1) = -diffusion(p, prob);
    if (p < n) {
      const double off = -1.0 / std::sqrt(alpha_coeff(p, prob) * alpha_coeff(p + 1, prob));
      a(p - 1, p) = off;
      a(p, p - 1) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

SolveOptions any_root() {
  SolveOptions o;
  o.sign = RootSign::Any;
  return o;
}

} // namespace

TEST_SUITE("instability") {

TEST_CASE("recursion coefficients") {
  const EigenProblem prob = problem(1, 0.0, 0.25);
  CHECK(alpha_coeff(1, prob) == doctest::Approx(13.0));
  CHECK(alpha_coeff(2, prob) == doctest::Approx(97.0));
  CHECK(alpha_coeff(2000, prob) / alpha_coeff(1000, prob) == doctest::Approx(16.0).epsilon(1e-5));
  CHECK_THROWS_AS(alpha_coeff(0, prob), InvalidArgument);

  const EigenProblem diffusive = problem(1, 1.0, 0.5);
  CHECK(sigma_shift(0.0, 1, diffusive) == doctest::Approx(std::sqrt(3.0)));
  CHECK(sigma_shift(0.5, 2, diffusive) == doctest::Approx(0.5 + std::sqrt(6.0)));
}

TEST_CASE("closed-form tail") {
  CHECK(g_closed_form(4.0) == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-15));
  for (double x : {2.5, 3.0, 10.0, 1e6}) {
    const double g = g_closed_form(x);
    CHECK(std::abs(g - 1.0 / (x - g)) < 1e-14 * g + 1e-300);
  }
  CHECK(g_closed_form(1e12) * 1e12 == doctest::Approx(1.0));
  CHECK_THROWS_AS(g_closed_form(2.0), InvalidArgument);
}

TEST_CASE("truncated continued fraction") {
  const EigenProblem prob = problem(3, 0.1, 0.25);
  const double sigma = 0.2;
  const double f40 = f_truncated(sigma, 2, 40, prob);
  const double f80 = f_truncated(sigma, 2, 80, prob);
  CHECK(std::abs(f40 - f80) < 1e-12 * f80);
  const double x2 = sigma_shift(sigma, 2, prob) * alpha_coeff(2, prob);
  CHECK(f40 > 0.0);
  CHECK(f40 < 1.0 / (x2 - 1.0));
  CHECK(f_truncated(1e8, 2, 40, prob) * 1e8 * alpha_coeff(2, prob) == doctest::Approx(1.0));

  const EigenProblem weak = problem(1, 0.1, 0.25);
  // sigma_2 alpha_2 = 1 sits below the analyzed regime.
  const double below = 1.0 / alpha_coeff(2, weak) - diffusion(2, weak);
  CHECK_THROWS_AS(f_truncated(below, 2, 40, weak), InvalidArgument);
  CHECK_FALSE(continued_fraction(-1e3, 2, 40, weak).has_value());

  std::vector<double> tail;
  REQUIRE(continued_fraction(sigma, 2, 10, prob, &tail));
  CHECK(tail.size() == 9);
  CHECK(tail.front() == doctest::Approx(f_truncated(sigma, 2, 10, prob)));
}

TEST_CASE("closed-form bracket") {
  const EigenProblem prob = problem(1, 0.0, 0.25);
  const EigenBounds b = eigenvalue_bounds(prob);
  CHECK(b.lower == doctest::Approx(0.04));
  CHECK(b.upper == doctest::Approx(4.0 / 26.0));
  CHECK(corrected_lower_bound(prob) == doctest::Approx(1.0 / 97.0));
}

TEST_CASE("non-diffusive leading root") {
  const EigenProblem prob = problem(1, 0.0, 0.25);
  const EigenResult r = solve_eigenvalue(prob);
  CHECK(r.sigma == doctest::Approx(0.028619).epsilon(1e-4));
  CHECK(satisfies_product_bound(r.sigma, prob));
  CHECK(r.sigma > corrected_lower_bound(prob));
  CHECK(r.sigma == doctest::Approx(tridiagonal_top(prob, 200)).epsilon(1e-10));
  CHECK(r.residual <= 1e-10 * alpha_coeff(1, prob) * r.sigma);
  CHECK(r.depth_shift <= 1e-10);
}

TEST_CASE("homogeneity in the steady amplitude") {
  const double s1 = solve_eigenvalue(problem(2, 0.0, 0.25, 1.0)).sigma;
  const double s3 = solve_eigenvalue(problem(2, 0.0, 0.25, 3.0)).sigma;
  CHECK(std::abs(s3 - 3.0 * s1) <= 1e-12 * s3);
}

TEST_CASE("roots agree with the tridiagonal eigenvalue problem") {
  struct Case {
    int j;
    double kappa, gamma;
    int m;
  };
  for (const Case c : {Case{1, 0.1, 0.25, 1}, Case{2, 0.1, 0.25, 1}, Case{3, 0.1, 0.25, 1},
                       Case{7, 0.1, 0.25, 1}, Case{10, 0.1, 0.25, 1}, Case{4, 0.02, 0.5, 1},
                       Case{3, 0.05, 0.75, 2}, Case{5, 0.0, 0.25, 3}}) {
    CAPTURE(c.j);
    CAPTURE(c.kappa);
    CAPTURE(c.gamma);
    const EigenProblem prob = problem(c.j, c.kappa, c.gamma, 1.0, c.m);
    const EigenResult r = solve_eigenvalue(prob, any_root());
    const double oracle = tridiagonal_top(prob, 200);
    CHECK(std::abs(r.sigma - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
  }
}

TEST_CASE("reference roots") {
  const double expected[] = {-0.113155, -0.009074, 0.201047, 0.516067, 0.942178,
                             1.481954,  2.136440,  2.906110, 3.791200, 4.791841};
  for (int j = 1; j <= 10; ++j) {
    CAPTURE(j);
    const EigenResult r = solve_eigenvalue(problem(j, 0.1, 0.25), any_root());
    CHECK(r.sigma == doctest::Approx(expected[j - 1]).epsilon(1e-5));
    CHECK(significant_terms(r) <= 14);
  }
}

TEST_CASE("eigenvector coefficients") {
  const EigenProblem prob = problem(3, 0.1, 0.25);
  const EigenResult r = solve_eigenvalue(prob);
  REQUIRE(r.analyzed_regime);
  REQUIRE(r.eta.size() + 1 == r.c.size());
  CHECK(r.c.front() == doctest::Approx(alpha_coeff(1, prob)));
  for (std::size_t i = 0; i < r.eta.size(); ++i) {
    const int p = static_cast<int>(i) + 2;
    const double x = sigma_shift(r.sigma, p, prob) * alpha_coeff(p, prob);
    CHECK(r.eta[i] < -1.0 / x);
    CHECK(r.eta[i] > -2.0 / x);
  }
  for (std::size_t i = 0; i < r.sign_c.size(); ++i) CHECK(r.sign_c[i] == (i % 2 == 0 ? 1 : -1));

  CoefficientSequence seq;
  seq.c = r.c;
  seq.log_abs_c = r.log_abs_c;
  seq.sign_c = r.sign_c;
  seq.eta = r.eta;
  const std::vector<double> res = recursion_residuals(r.sigma, seq, prob);
  REQUIRE(res.size() == r.c.size() - 1);
  for (std::size_t i = 0; i + 1 < res.size(); ++i) CHECK(res[i] < 1e-12);

  // Super-geometric decay: the log ratios keep falling.
  std::vector<double> steps;
  for (std::size_t i = 1; i < r.log_abs_c.size(); ++i)
    steps.push_back(r.log_abs_c[i] - r.log_abs_c[i - 1]);
  for (std::size_t i = 3; i < steps.size(); ++i) CHECK(steps[i] < steps[i - 1]);
}

TEST_CASE("eigenmode synthesis") {
  const EigenProblem prob = problem(2, 0.1, 0.25);
  const EigenResult r = solve_eigenvalue(prob, any_root());
  const Grid g(24, 12, 48);
  const SpectralField mode = synthesize_eigenmode(r, prob, g);
  CHECK(l2_norm(mode) == doctest::Approx(1.0).epsilon(1e-13));
  mode.for_each_mode([&](const Wavevector& k, const Complex& c, double) {
    if (std::abs(c) == 0.0) return;
    CHECK(std::llabs(k.k1) == 4);
    CHECK(std::llabs(k.k2) == 2);
    CHECK(k.k3 >= 1);
    CHECK(std::real(c) == 0.0);
  });
  CHECK(std::real(mode.coeff({4, 2, 2}) / mode.coeff({4, 2, 1})) ==
        doctest::Approx(r.c[1] / r.c[0]));
  CHECK_THROWS_AS(synthesize_eigenmode(r, prob, Grid(9, 12, 48)), InvalidArgument);
  CHECK_THROWS_AS(synthesize_eigenmode(r, prob, Grid(24, 12, 12)), InvalidArgument);
}

TEST_CASE("growth constant") {
  Params p;
  p.gamma = 0.5;
  CHECK(critical_kappa_half(p) == doctest::Approx(1.0 / 34.0));
  p.kappa = 0.02;
  CHECK(growth_constant(2, p) == doctest::Approx(1.0 / 34.0 - 0.02));
  p.kappa = 0.05;
  CHECK(growth_constant(2, p) < 0.0);
  p.gamma = 0.25;
  p.kappa = 0.1;
  const double h = 16.0 + 4.0;
  CHECK(growth_constant(2, p) ==
        doctest::Approx(h / (8.0 * (h + 4.0) + 2.0 * 16.0) - 0.1 / 4.0 * std::pow(h + 4.0, 0.25)));
}

TEST_CASE("failures") {
  CHECK_THROWS_AS(solve_eigenvalue(problem(1, 0.1, 0.25)), NoUnstableEigenvalue);
  CHECK_THROWS_AS(solve_eigenvalue(problem(0, 0.1, 0.25)), InvalidArgument);
  CHECK_THROWS_AS(solve_eigenvalue(problem(1, 0.1, 0.25, 0.0)), InvalidArgument);
  SolveOptions shallow;
  shallow.depth = 2;
  CHECK_THROWS_AS(solve_eigenvalue(problem(3, 0.1, 0.25), shallow), InvalidArgument);
}

} // TEST_SUITE
