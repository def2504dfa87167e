#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "mgslab/error.hpp"
#include "mgslab/spectral_ops.hpp"
#include "mgslab/symbols.hpp"

using namespace mgslab;

TEST_SUITE("mg_symbols") {

TEST_CASE("parameter validation") {
  const Params p = Params::from_field(2.0, 3.0, 0.5, 0.1, 0.25);
  CHECK(p.mu == doctest::Approx(18.0));
  Params bad = p;
  bad.gamma = 1.5;
  CHECK_THROWS_WITH_AS(bad.validate(), "gamma must lie in (0,1]", InvalidArgument);
  bad = p;
  bad.mu = 17.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = p;
  bad.m = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = p;
  bad.omega = -1.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("frequency planes") {
  CHECK_THROWS_AS(FrequencyPlane(0, 1), InvalidArgument);
  CHECK_THROWS_AS(FrequencyPlane(2, 4), InvalidArgument);
  const FrequencyPlane q(2, -3);
  CHECK(q.contains({2, -3, 5}));
  CHECK(q.contains({-4, 6, 1}));
  CHECK_FALSE(q.contains({1, -1, 1}));
  CHECK(FrequencyPlane(1, 0).contains({7, 0, 2}));
}

TEST_CASE("symbol values at small wavevectors") {
  const Params p;
  const SymbolValue z = mg_symbol({0, 0, 1}, p);
  CHECK(z.m1 == 0.0);
  CHECK(z.m2 == 0.0);
  CHECK(z.m3 == 0.0);

  const SymbolValue a = mg_symbol({1, 1, 1}, p);
  CHECK(a.m1 == doctest::Approx(5.0 / 13.0).epsilon(1e-15));
  CHECK(a.m2 == doctest::Approx(-7.0 / 13.0).epsilon(1e-15));
  CHECK(a.m3 == doctest::Approx(2.0 / 13.0).epsilon(1e-15));
  CHECK(std::abs(a.divergence({1, 1, 1})) < 1e-16);

  const SymbolValue b = mg_symbol({0, 1, 1}, p);
  CHECK(b.m1 == doctest::Approx(4.0 / 9.0));
  CHECK(b.m2 == doctest::Approx(-1.0 / 9.0));
  CHECK(b.m3 == doctest::Approx(1.0 / 9.0));

  CHECK_THROWS_AS(mg_symbol({1, 2, 0}, p), InvalidArgument);
}

TEST_CASE("lattice sweeps: divergence-free and even") {
  for (const Params& p : {Params{}, Params::from_field(0.7, 1.3, 0.4, 0.1, 0.5),
                          Params::from_field(1.9, 0.6, 1.7, 0.1, 0.5)}) {
    CHECK(max_divergence_residual(32, p) <= 1e-12);
    CHECK(max_evenness_defect(32, p) == 0.0);
  }
  CHECK_THROWS_AS(max_divergence_residual(1, Params{}), InvalidArgument);
}

TEST_CASE("velocity from a scalar") {
  const Params p;
  const Grid g(8);
  SpectralField steady(g);
  steady.set_pair({0, 0, 1}, Complex(0.0, -0.5));
  for (const auto& u : velocity_from_scalar(steady, p)) CHECK(max_abs_coeff(u) == 0.0);

  SpectralField one(g);
  const Complex th(0.3, -0.2);
  one.set_pair({1, 1, 1}, th);
  const VectorField u = velocity_from_scalar(one, p);
  CHECK(std::abs(u[0].coeff({1, 1, 1}) - 5.0 / 13.0 * th) < 1e-16);
  CHECK(std::abs(u[1].coeff({1, 1, 1}) + 7.0 / 13.0 * th) < 1e-16);
  CHECK(std::abs(u[2].coeff({1, 1, 1}) - 2.0 / 13.0 * th) < 1e-16);
  // Evenness makes U real: the conjugate mode carries the conjugate value.
  CHECK(std::abs(u[0].coeff({-1, -1, -1}) - std::conj(5.0 / 13.0 * th)) < 1e-16);

  const SpectralField r = testing::random_hermitian(Grid(12, 10, 8), 4);
  const VectorField ur = velocity_from_scalar(r, p);
  CHECK(spectral_divergence_max(ur) <= 1e-12 * max_abs_coeff(r) * 12.0);
  for (const auto& c : ur) {
    c.for_each_mode([](const Wavevector& k, const Complex& v, double) {
      if (k.k3 == 0) CHECK(v == Complex(0.0));
    });
  }
}

TEST_CASE("magnetic perturbation") {
  const Params p = Params::from_field(1.0, 2.0, 0.5, 0.1, 0.25);
  const Grid g(8);
  SpectralField steady(g);
  steady.set_pair({0, 0, 2}, Complex(0.0, -0.5));
  for (const auto& b : magnetic_perturbation(steady, p)) CHECK(max_abs_coeff(b) == 0.0);

  SpectralField one(g);
  const Complex th(1.0, 0.5);
  one.set_pair({1, 1, 1}, th);
  const VectorField b = magnetic_perturbation(one, p);
  const SymbolValue s = mg_symbol({1, 1, 1}, p);
  const Complex factor = (p.beta / p.eta) * Complex(0.0, 1.0 / 3.0);
  CHECK(std::abs(b[0].coeff({1, 1, 1}) - factor * s.m1 * th) < 1e-15);
  CHECK(std::abs(b[1].coeff({1, 1, 1}) - factor * s.m2 * th) < 1e-15);
  CHECK(std::abs(b[2].coeff({1, 1, 1}) - factor * s.m3 * th) < 1e-15);

  const SpectralField r = testing::random_hermitian(Grid(10), 8);
  CHECK(spectral_divergence_max(magnetic_perturbation(r, p)) <= 1e-12 * max_abs_coeff(r) * 10.0);
}

TEST_CASE("linear growth bound is cutoff stable while the raw sup grows") {
  const Params p;
  const double at111 = std::sqrt(78.0) / 13.0 / std::sqrt(3.0);
  CHECK(at111 == doctest::Approx(0.3923).epsilon(1e-4));
  const double c2 = symbol_linear_bound_constant(2, p);
  const double c8 = symbol_linear_bound_constant(8, p);
  const double c16 = symbol_linear_bound_constant(16, p);
  CHECK(c2 >= at111);
  CHECK(c8 >= c2);
  CHECK(c16 >= c8);
  CHECK(c16 - c8 < 0.5 * c8);
  CHECK(symbol_sup(32, p) > 1.5 * symbol_sup(16, p));
}

TEST_CASE("anisotropic growth along curved frequency paths") {
  const Params p;
  const int k1s[] = {64, 128, 256, 512};
  const GrowthExponents half = anisotropy_probe(0.5, k1s, p);
  CHECK(std::abs(half.e1 - 0.5) < 0.1);
  CHECK(std::abs(half.e2 - 1.0) < 0.1);
  CHECK(std::abs(half.e3 - 1.0) < 0.1);
  const GrowthExponents quarter = anisotropy_probe(0.25, k1s, p);
  CHECK(std::abs(quarter.e1 - 0.25) < 0.1);
  CHECK(std::abs(quarter.e2 - 1.0) < 0.1);
  CHECK(std::abs(quarter.e3 - 0.5) < 0.1);

  const int single[] = {64};
  CHECK_THROWS_AS(anisotropy_probe(0.5, single, p), InvalidArgument);
  CHECK_THROWS_AS(anisotropy_probe(0.6, k1s, p), InvalidArgument);
  const int low[] = {8, 16, 32, 64};
  CHECK_THROWS_AS(anisotropy_probe(0.5, low, p), InvalidArgument);
}

TEST_CASE("plane bound constants") {
  const Params p;
  const FrequencyPlane diag(1, 1);
  const double c64 = plane_bound_constant(diag, 64, p);
  const double c128 = plane_bound_constant(diag, 128, p);
  CHECK(std::isfinite(c64));
  CHECK(std::abs(c128 - c64) < 0.01 * c64);
  CHECK(plane_bound_constant(FrequencyPlane(8, 1), 128, p) > c128);
}

} // TEST_SUITE
