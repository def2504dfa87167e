#include "mgslab/symbols.hpp"

#include <algorithm>
#include <cmath>

#include "mgslab/error.hpp"
#include "mgslab/fitting.hpp"

namespace mgslab {

double SymbolValue::norm() const { return std::sqrt(m1 * m1 + m2 * m2 + m3 * m3); }

double SymbolValue::divergence(const Wavevector& k) const {
  return static_cast<double>(k.k1) * m1 + static_cast<double>(k.k2) * m2 +
         static_cast<double>(k.k3) * m3;
}

SymbolValue mg_symbol(const Wavevector& k, const Params& p) {
  if (k.k3 == 0) throw InvalidArgument("MG symbol is undefined on k3 = 0");
  const double k1 = static_cast<double>(k.k1);
  const double k2 = static_cast<double>(k.k2);
  const double k3 = static_cast<double>(k.k3);
  const double kk = static_cast<double>(k.norm2());
  const double w = p.omega, mu = p.mu;
  const double k2sq = k2 * k2;
  const double den = 4.0 * w * w * k3 * k3 * kk + mu * mu * k2sq * k2sq;
  SymbolValue s;
  s.m1 = (2.0 * w * k2 * k3 * kk - mu * k1 * k2sq * k3) / den;
  s.m2 = (-2.0 * w * k1 * k3 * kk - mu * k2sq * k2 * k3) / den;
  s.m3 = mu * k2sq * (k1 * k1 + k2sq) / den;
  return s;
}

namespace {

VectorField zero_vector(const Grid& g) { return {SpectralField(g), SpectralField(g), SpectralField(g)}; }

} // namespace

VectorField velocity_from_scalar(const SpectralField& theta, const Params& p) {
  VectorField u = zero_vector(theta.grid());
  std::size_t idx = 0;
  theta.for_each_mode([&](const Wavevector& k, const Complex& c, double) {
    if (k.k3 != 0) {
      const SymbolValue s = mg_symbol(k, p);
      u[0].data()[idx] = s.m1 * c;
      u[1].data()[idx] = s.m2 * c;
      u[2].data()[idx] = s.m3 * c;
    }
    ++idx;
  });
  return u;
}

VectorField magnetic_perturbation(const SpectralField& theta, const Params& p) {
  VectorField b = zero_vector(theta.grid());
  const double ratio = p.beta / p.eta;
  std::size_t idx = 0;
  theta.for_each_mode([&](const Wavevector& k, const Complex& c, double) {
    if (k.k3 != 0) {
      const SymbolValue s = mg_symbol(k, p);
      const Complex f = Complex(0.0, ratio * static_cast<double>(k.k2) /
                                         static_cast<double>(k.norm2())) * c;
      b[0].data()[idx] = s.m1 * f;
      b[1].data()[idx] = s.m2 * f;
      b[2].data()[idx] = s.m3 * f;
    }
    ++idx;
  });
  return b;
}

double spectral_divergence_max(const VectorField& v) {
  double worst = 0.0;
  std::size_t idx = 0;
  v[0].for_each_mode([&](const Wavevector& k, const Complex&, double) {
    const Complex d = static_cast<double>(k.k1) * v[0].data()[idx] +
                      static_cast<double>(k.k2) * v[1].data()[idx] +
                      static_cast<double>(k.k3) * v[2].data()[idx];
    worst = std::max(worst, std::abs(d));
    ++idx;
  });
  return worst;
}

namespace {

// Visits k with |k1|,|k2| <= K and 1 <= k3 <= K. The symbols are even, so
// the k3 < 0 half adds nothing to maxima.
template <class Fn>
void sweep_upper_half(int cutoff, Fn&& fn) {
  for (int k1 = -cutoff; k1 <= cutoff; ++k1)
    for (int k2 = -cutoff; k2 <= cutoff; ++k2)
      for (int k3 = 1; k3 <= cutoff; ++k3) fn(Wavevector{k1, k2, k3});
}

void require_cutoff(int cutoff) {
  if (cutoff < 2) throw InvalidArgument("cutoff K must be >= 2");
}

} // namespace

double symbol_linear_bound_constant(int cutoff, const Params& p) {
  require_cutoff(cutoff);
  double best = 0.0;
  sweep_upper_half(cutoff, [&](const Wavevector& k) {
    best = std::max(best, mg_symbol(k, p).norm() / std::sqrt(static_cast<double>(k.norm2())));
  });
  return best;
}

double symbol_sup(int cutoff, const Params& p) {
  require_cutoff(cutoff);
  double best = 0.0;
  sweep_upper_half(cutoff, [&](const Wavevector& k) {
    const SymbolValue s = mg_symbol(k, p);
    best = std::max({best, std::abs(s.m1), std::abs(s.m2), std::abs(s.m3)});
  });
  return best;
}

double max_divergence_residual(int cutoff, const Params& p) {
  require_cutoff(cutoff);
  double worst = 0.0;
  sweep_upper_half(cutoff, [&](const Wavevector& k) {
    worst = std::max(worst, std::abs(mg_symbol(k, p).divergence(k)));
  });
  return worst;
}

double max_evenness_defect(int cutoff, const Params& p) {
  require_cutoff(cutoff);
  double worst = 0.0;
  sweep_upper_half(cutoff, [&](const Wavevector& k) {
    const SymbolValue a = mg_symbol(k, p), b = mg_symbol(-k, p);
    worst = std::max({worst, std::abs(a.m1 - b.m1), std::abs(a.m2 - b.m2), std::abs(a.m3 - b.m3)});
  });
  return worst;
}

GrowthExponents anisotropy_probe(double r, std::span<const int> k1_values, const Params& p,
                                 CurveRounding rounding) {
  if (!(r > 0.0 && r <= 0.5)) throw InvalidArgument("r must lie in (0, 1/2]");
  if (k1_values.size() < 2) throw InvalidArgument("slope fit needs at least 2 points");
  if (k1_values.size() < 4) throw InvalidArgument("anisotropy probe needs at least 4 points");
  for (std::size_t i = 0; i < k1_values.size(); ++i) {
    if (k1_values[i] < 16) throw InvalidArgument("k1 values must be >= 16");
    if (i > 0 && k1_values[i] <= k1_values[i - 1]) {
      throw InvalidArgument("k1 values must be strictly increasing");
    }
  }
  std::vector<double> x, y1, y2, y3;
  for (int k1 : k1_values) {
    const double c = std::pow(static_cast<double>(k1), r);
    const auto k2 = static_cast<std::int64_t>(rounding == CurveRounding::Nearest ? std::round(c)
                                                                                : std::floor(c));
    const SymbolValue s = mg_symbol(Wavevector{k1, k2, 1}, p);
    x.push_back(std::log(static_cast<double>(k1)));
    y1.push_back(std::log(std::abs(s.m1)));
    y2.push_back(std::log(std::abs(s.m2)));
    y3.push_back(std::log(std::abs(s.m3)));
  }
  return {linear_fit(x, y1).slope, linear_fit(x, y2).slope, linear_fit(x, y3).slope};
}

double plane_bound_constant(const FrequencyPlane& plane, int cutoff, const Params& p) {
  require_cutoff(cutoff);
  const std::int64_t j1 = std::llabs(plane.j1()), j2 = plane.j2() * (plane.j1() < 0 ? -1 : 1);
  // Lattice points of P_q are t (j1, j2, .) for integer t.
  std::int64_t tmax = cutoff / j1;
  if (j2 != 0) tmax = std::min<std::int64_t>(tmax, cutoff / std::llabs(j2));
  double best = 0.0;
  for (std::int64_t t = -tmax; t <= tmax; ++t) {
    for (std::int64_t k3 = 1; k3 <= cutoff; ++k3) {
      const Wavevector k{t * j1, t * j2, k3};
      const SymbolValue s = mg_symbol(k, p);
      best = std::max({best, std::abs(s.m1), std::abs(s.m2), std::abs(s.m3)});
    }
  }
  return best;
}

} // namespace mgslab
