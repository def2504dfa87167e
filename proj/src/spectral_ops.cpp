#include "mgslab/spectral_ops.hpp"

#include <cmath>
#include <cstdlib>

#include "mgslab/error.hpp"
#include "mgslab/params.hpp"

namespace mgslab {

SpectralField dealias(SpectralField f) {
  const Grid g = f.grid();
  const std::int64_t c1 = g.dealias_cutoff(0), c2 = g.dealias_cutoff(1), c3 = g.dealias_cutoff(2);
  f.for_each_mode([&](const Wavevector& k, Complex& c, double) {
    if (std::llabs(k.k1) > c1 || std::llabs(k.k2) > c2 || k.k3 > c3) c = 0.0;
  });
  return f;
}

SpectralField project_zero_vertical_mean(SpectralField f) {
  f.for_each_mode([](const Wavevector& k, Complex& c, double) {
    if (k.k3 == 0) c = 0.0;
  });
  return f;
}

SpectralField fractional_laplacian(SpectralField f, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw InvalidArgument("gamma must lie in (0,1]");
  }
  f.for_each_mode([gamma](const Wavevector& k, Complex& c, double) {
    const double k2 = static_cast<double>(k.norm2());
    // pow(x, 1.0) == x exactly, so gamma = 1 reproduces the Laplacian symbol.
    c *= std::pow(k2, gamma);
  });
  return f;
}

double sobolev_norm(const SpectralField& f, double s) {
  double sum = 0.0;
  f.for_each_mode([&](const Wavevector& k, const Complex& c, double w) {
    const std::int64_t k2 = k.norm2();
    if (k2 == 0) return;
    sum += w * std::pow(static_cast<double>(k2), s) * std::norm(c);
  });
  return std::sqrt(sum);
}

double l2_norm(const SpectralField& f) {
  double sum = 0.0;
  f.for_each_mode([&](const Wavevector&, const Complex& c, double w) { sum += w * std::norm(c); });
  return std::sqrt(sum);
}

double max_abs_coeff(const SpectralField& f) {
  double m = 0.0;
  for (const auto& c : f.data()) m = std::max(m, std::abs(c));
  return m;
}

double off_plane_fraction(const SpectralField& f, const FrequencyPlane& plane) {
  double off = 0.0, total = 0.0;
  f.for_each_mode([&](const Wavevector& k, const Complex& c, double w) {
    const double e = w * std::norm(c);
    total += e;
    if (!plane.contains(k)) off += e;
  });
  return total > 0.0 ? off / total : 0.0;
}

SpectralField restrict_to_plane(SpectralField f, const FrequencyPlane& plane) {
  f.for_each_mode([&](const Wavevector& k, Complex& c, double) {
    if (!plane.contains(k)) c = 0.0;
  });
  return f;
}

double outer_band_fraction(const SpectralField& f) {
  const Grid& g = f.grid();
  // |k_j| > (2/3) cutoff_j  <=>  3 |k_j| > 2 cutoff_j
  const std::int64_t c1 = g.dealias_cutoff(0), c2 = g.dealias_cutoff(1), c3 = g.dealias_cutoff(2);
  double outer = 0.0, total = 0.0;
  f.for_each_mode([&](const Wavevector& k, const Complex& c, double w) {
    const double e = w * std::norm(c);
    total += e;
    if (3 * std::llabs(k.k1) > 2 * c1 || 3 * std::llabs(k.k2) > 2 * c2 || 3 * k.k3 > 2 * c3) {
      outer += e;
    }
  });
  return total > 0.0 ? outer / total : 0.0;
}

bool has_zero_vertical_mean(const SpectralField& f) {
  bool ok = true;
  f.for_each_mode([&](const Wavevector& k, const Complex& c, double) {
    if (k.k3 == 0 && c != Complex{}) ok = false;
  });
  return ok;
}

double hermitian_defect(const SpectralField& f) {
  const Grid& g = f.grid();
  const int n1 = g.n1(), n2 = g.n2();
  double worst = 0.0;
  auto data = f.data();
  for (int i3 : {0, g.n3() / 2}) {
    for (int i1 = 0; i1 < n1; ++i1) {
      for (int i2 = 0; i2 < n2; ++i2) {
        const Complex a = data[f.index(i1, i2, i3)];
        const Complex b = data[f.index((n1 - i1) % n1, (n2 - i2) % n2, i3)];
        worst = std::max(worst, std::abs(a - std::conj(b)));
      }
    }
  }
  return worst;
}

} // namespace mgslab
