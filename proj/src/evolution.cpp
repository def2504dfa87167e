#include "mgslab/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mgslab/error.hpp"
#include "mgslab/spectral_ops.hpp"
#include "mgslab/symbols.hpp"

namespace mgslab {

void EvolutionConfig::validate() const {
  if (!(dt > 0.0)) throw InvalidArgument("dt must be positive");
  if (!(t_end >= dt)) throw InvalidArgument("t_end must be >= dt");
  if (!(s >= 0.0)) throw InvalidArgument("s must be nonnegative");
  if (record_every < 1) throw InvalidArgument("record_every must be a positive integer");
  if (!(cfl > 0.0)) throw InvalidArgument("cfl must be positive");
  if (!(norm_ceiling > 0.0)) throw InvalidArgument("norm_ceiling must be positive");
  if (enforce_plane && !plane) throw InvalidArgument("enforce_plane requires a plane");
}

SteadyStatePair steady_state_pair(const Params& p, const Grid& grid) {
  p.validate();
  if (3 * p.m > grid.n3()) {
    throw InvalidArgument("steady state frequency m = " + std::to_string(p.m) +
                          " is not resolvable (needs m <= n3/3)");
  }
  SteadyStatePair pair{SpectralField(grid), SpectralField(grid)};
  const Wavevector k{0, 0, p.m};
  // Same expression as the diffusion table so the pair balances to roundoff.
  const double rate = p.kappa * std::pow(static_cast<double>(k.norm2()), p.gamma);
  pair.theta0.set_pair(k, Complex(0.0, -0.5 * p.a));
  pair.source.set_pair(k, Complex(0.0, -0.5 * p.a * rate));
  return pair;
}

Integrator::Integrator(const Grid& grid, const Params& p, Model model)
    : grid_(grid), params_(p), model_(model), fft_(grid) {
  params_.validate();
  const std::size_t ns = grid.spectral_size();
  decay_rate_.resize(ns);
  sym1_.resize(ns);
  sym2_.resize(ns);
  sym3_.resize(ns);
  keep_.resize(ns);
  work_.resize(ns);
  const std::int64_t c1 = grid.dealias_cutoff(0), c2 = grid.dealias_cutoff(1),
                     c3 = grid.dealias_cutoff(2);
  SpectralField probe(grid);
  std::size_t idx = 0;
  probe.for_each_mode([&](const Wavevector& k, const Complex&, double) {
    decay_rate_[idx] = params_.kappa * std::pow(static_cast<double>(k.norm2()), params_.gamma);
    const bool inside = std::llabs(k.k1) <= c1 && std::llabs(k.k2) <= c2 && k.k3 <= c3;
    keep_[idx] = inside && k.k3 != 0;
    if (k.k3 != 0) {
      const SymbolValue s = mg_symbol(k, params_);
      sym1_[idx] = s.m1;
      sym2_[idx] = s.m2;
      sym3_[idx] = s.m3;
      if (keep_[idx]) {
        max_sym_[0] = std::max(max_sym_[0], std::abs(s.m1));
        max_sym_[1] = std::max(max_sym_[1], std::abs(s.m2));
        max_sym_[2] = std::max(max_sym_[2], std::abs(s.m3));
      }
    }
    ++idx;
  });
  const std::size_t np = grid.physical_size();
  if (model_ == Model::Nonlinear) {
    phys_.assign(6, std::vector<double>(np));
  } else {
    phys_.assign(1, std::vector<double>(np));
    cos_column_.resize(static_cast<std::size_t>(grid.n3()));
    for (int i3 = 0; i3 < grid.n3(); ++i3) {
      const double x3 = 2.0 * std::numbers::pi * i3 / grid.n3();
      cos_column_[static_cast<std::size_t>(i3)] = params_.a * params_.m * std::cos(params_.m * x3);
    }
  }
}

void Integrator::explicit_term_into(const SpectralField& theta, SpectralField& out) {
  const std::size_t ns = grid_.spectral_size();
  auto th = theta.data();
  auto res = out.data();
  if (model_ == Model::Linearized) {
    for (std::size_t i = 0; i < ns; ++i) work_[i] = keep_[i] ? sym3_[i] * th[i] : Complex{};
    auto& buf = phys_[0];
    fft_.inverse(work_, buf);
    const std::size_t n3 = static_cast<std::size_t>(grid_.n3());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= cos_column_[i % n3];
    fft_.forward(buf, res);
    for (std::size_t i = 0; i < ns; ++i) res[i] = keep_[i] ? -res[i] : Complex{};
    return;
  }

  // U_j = M_j D th and d_j D th in physical space.
  const double* sym[3] = {sym1_.data(), sym2_.data(), sym3_.data()};
  for (int j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < ns; ++i) work_[i] = keep_[i] ? sym[j][i] * th[i] : Complex{};
    fft_.inverse(work_, phys_[static_cast<std::size_t>(j)]);
  }
  const Grid& g = grid_;
  for (int j = 0; j < 3; ++j) {
    std::size_t idx = 0;
    for (int i1 = 0; i1 < g.n1(); ++i1) {
      const double k1 = Grid::wavenumber(i1, g.n1());
      for (int i2 = 0; i2 < g.n2(); ++i2) {
        const double k2 = Grid::wavenumber(i2, g.n2());
        for (int i3 = 0; i3 < g.n3_half(); ++i3, ++idx) {
          const double kj = j == 0 ? k1 : (j == 1 ? k2 : static_cast<double>(i3));
          work_[idx] = keep_[idx] ? Complex(0.0, kj) * th[idx] : Complex{};
        }
      }
    }
    fft_.inverse(work_, phys_[static_cast<std::size_t>(3 + j)]);
  }
  auto& prod = phys_[0];
  const auto& u2 = phys_[1];
  const auto& u3 = phys_[2];
  const auto& g1 = phys_[3];
  const auto& g2 = phys_[4];
  const auto& g3 = phys_[5];
  for (std::size_t i = 0; i < prod.size(); ++i) {
    prod[i] = prod[i] * g1[i] + u2[i] * g2[i] + u3[i] * g3[i];
  }
  fft_.forward(prod, res);
  for (std::size_t i = 0; i < ns; ++i) res[i] = keep_[i] ? -res[i] : Complex{};
}

SpectralField Integrator::explicit_term(const SpectralField& theta) {
  if (!(theta.grid() == grid_)) throw InvalidArgument("field grid does not match integrator");
  SpectralField out(grid_);
  explicit_term_into(theta, out);
  return out;
}

SpectralField Integrator::rhs(const SpectralField& theta, const SpectralField* source) {
  SpectralField out = explicit_term(theta);
  auto o = out.data();
  auto th = theta.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] -= decay_rate_[i] * th[i];
  if (source) {
    if (!(source->grid() == grid_)) throw InvalidArgument("source grid does not match integrator");
    auto s = source->data();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] += s[i];
  }
  return out;
}

void Integrator::refresh_factors(double h) {
  if (h == factors_h_) return;
  const std::size_t ns = grid_.spectral_size();
  e_full_.resize(ns);
  e_half_.resize(ns);
  phi_full_.resize(ns);
  phi_half_.resize(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    const double c = decay_rate_[i];
    e_full_[i] = std::exp(-c * h);
    e_half_[i] = std::exp(-c * 0.5 * h);
    phi_full_[i] = c > 0.0 ? -std::expm1(-c * h) / c : h;
    phi_half_[i] = c > 0.0 ? -std::expm1(-c * 0.5 * h) / c : 0.5 * h;
  }
  factors_h_ = h;
}

void Integrator::step(SpectralField& theta, const SpectralField* source, double h) {
  if (!(h > 0.0)) throw InvalidArgument("step size must be positive");
  if (!(theta.grid() == grid_)) throw InvalidArgument("field grid does not match integrator");
  if (source && !(source->grid() == grid_)) {
    throw InvalidArgument("source grid does not match integrator");
  }
  refresh_factors(h);
  const std::size_t ns = grid_.spectral_size();
  SpectralField a0(grid_), mid(grid_), a1(grid_);
  explicit_term_into(theta, a0);
  auto th = theta.data();
  auto m = mid.data();
  auto x0 = a0.data();
  for (std::size_t i = 0; i < ns; ++i) {
    m[i] = e_half_[i] * (th[i] + 0.5 * h * x0[i]);
    if (source) m[i] += phi_half_[i] * source->data()[i];
  }
  explicit_term_into(mid, a1);
  auto x1 = a1.data();
  for (std::size_t i = 0; i < ns; ++i) {
    Complex v = e_full_[i] * th[i] + h * e_half_[i] * x1[i];
    if (source) v += phi_full_[i] * source->data()[i];
    th[i] = v;
  }
}

double Integrator::stable_dt(const SpectralField& theta, double cfl) {
  double rate = 0.0;
  if (model_ == Model::Linearized) {
    rate = std::abs(params_.a * params_.m) * max_sym_[2];
  } else {
    const std::size_t ns = grid_.spectral_size();
    auto th = theta.data();
    const double* sym[3] = {sym1_.data(), sym2_.data(), sym3_.data()};
    auto& buf = phys_[0];
    auto sup = [&] {
      fft_.inverse(work_, buf);
      double v = 0.0;
      for (double x : buf) v = std::max(v, std::abs(x));
      return v;
    };
    for (int j = 0; j < 3; ++j) {
      for (std::size_t i = 0; i < ns; ++i) work_[i] = keep_[i] ? sym[j][i] * th[i] : Complex{};
      rate += sup() * grid_.dealias_cutoff(j);
    }
    for (int j = 0; j < 3; ++j) {
      std::size_t idx = 0;
      for (int i1 = 0; i1 < grid_.n1(); ++i1) {
        for (int i2 = 0; i2 < grid_.n2(); ++i2) {
          for (int i3 = 0; i3 < grid_.n3_half(); ++i3, ++idx) {
            const double kj = j == 0   ? static_cast<double>(Grid::wavenumber(i1, grid_.n1()))
                              : j == 1 ? static_cast<double>(Grid::wavenumber(i2, grid_.n2()))
                                       : static_cast<double>(i3);
            work_[idx] = keep_[idx] ? Complex(0.0, kj) * th[idx] : Complex{};
          }
        }
      }
      rate += sup() * max_sym_[j];
    }
  }
  return rate > 0.0 ? cfl / rate : std::numeric_limits<double>::infinity();
}

SpectralField nonlinear_rhs(const SpectralField& theta, const SpectralField& source,
                            const Params& p) {
  Integrator integ(theta.grid(), p, Model::Nonlinear);
  return integ.rhs(project_zero_vertical_mean(theta), &source);
}

SpectralField linearized_rhs(const SpectralField& theta, const Params& p) {
  Integrator integ(theta.grid(), p, Model::Linearized);
  return integ.rhs(project_zero_vertical_mean(theta), nullptr);
}

SpectralField step(const SpectralField& theta, const SpectralField& source, const Params& p,
                   double dt) {
  Integrator integ(theta.grid(), p, Model::Nonlinear);
  SpectralField out = project_zero_vertical_mean(theta);
  const SpectralField src = project_zero_vertical_mean(source);
  integ.step(out, &src, dt);
  return out;
}

namespace {

bool all_finite(const SpectralField& f) {
  for (const auto& c : f.data()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

NormSample sample_of(const SpectralField& f, double t, double s, double gamma, double leak) {
  NormSample out;
  out.t = t;
  out.l2 = l2_norm(f);
  out.hs = sobolev_norm(f, s);
  out.hs_plus_gamma = sobolev_norm(f, s + gamma);
  out.support_leak = leak;
  out.resolved = outer_band_fraction(f) <= 0.01;
  return out;
}

RunResult drive(Integrator& integ, const SpectralField& theta0, const SpectralField* source,
                const EvolutionConfig& cfg) {
  cfg.validate();
  const Params& p = integ.params();
  RunResult result{.state = project_zero_vertical_mean(theta0), .series = {}, .message = {}};
  SpectralField& theta = result.state;
  if (!(theta.grid() == integ.grid())) throw InvalidArgument("initial data grid mismatch");

  double leak = cfg.plane ? off_plane_fraction(theta, *cfg.plane) : 0.0;
  if (cfg.enforce_plane) theta = restrict_to_plane(std::move(theta), *cfg.plane);
  result.series.append(sample_of(theta, 0.0, cfg.s, p.gamma, leak));

  double t = 0.0;
  while (t < cfg.t_end) {
    double dt = cfg.dt;
    if (cfg.adaptive_dt) dt = std::min(dt, integ.stable_dt(theta, cfg.cfl));
    const double remaining = cfg.t_end - t;
    const double steps_left = std::max(1.0, std::ceil(remaining / dt - 1e-9));
    const double h = remaining / steps_left;
    const int burst = static_cast<int>(std::min<double>(cfg.record_every, steps_left));

    for (int i = 0; i < burst; ++i) {
      integ.step(theta, source, h);
      ++result.steps;
      t = (i + 1 == static_cast<int>(steps_left)) ? cfg.t_end : t + h;
      if (cfg.plane) leak = off_plane_fraction(theta, *cfg.plane);
      if (cfg.enforce_plane) theta = restrict_to_plane(std::move(theta), *cfg.plane);

      const double hs = sobolev_norm(theta, cfg.s);
      if (!all_finite(theta) || !std::isfinite(hs) || hs > cfg.norm_ceiling ||
          l2_norm(theta) > cfg.norm_ceiling) {
        result.status = RunStatus::BlowUp;
        result.failure_time = t;
        result.final_time = t;
        std::ostringstream msg;
        msg << "blow-up at t = " << t << " (H^" << cfg.s << " norm " << hs << ", ceiling "
            << cfg.norm_ceiling << ")";
        result.message = msg.str();
        result.under_resolved = !result.series.all_resolved();
        return result;
      }
    }
    result.series.append(sample_of(theta, t, cfg.s, p.gamma, leak));
  }
  result.final_time = t;
  result.under_resolved = !result.series.all_resolved();
  if (result.under_resolved) result.message = "under-resolved: outer-band energy exceeded 1%";
  return result;
}

} // namespace

RunResult run_nonlinear(const SpectralField& theta0, const SpectralField& source, const Params& p,
                        const EvolutionConfig& cfg) {
  Integrator integ(theta0.grid(), p, Model::Nonlinear);
  const SpectralField src = project_zero_vertical_mean(source);
  return drive(integ, theta0, &src, cfg);
}

RunResult run_linearized(const SpectralField& theta0, const Params& p,
                         const EvolutionConfig& cfg) {
  Integrator integ(theta0.grid(), p, Model::Linearized);
  return drive(integ, theta0, nullptr, cfg);
}

double default_smallness_epsilon(const Params& p) { return 0.01 * p.kappa; }

SmallnessReport smallness_check(const SpectralField& theta0, double source_sup_norm,
                                const Params& p, double s, double epsilon) {
  if (p.gamma < 0.5) {
    throw InvalidArgument("smallness check applies to gamma >= 1/2 only");
  }
  const double threshold = 2.5 + (1.0 - 2.0 * p.gamma);
  if (!(s > threshold)) {
    std::ostringstream msg;
    msg << "s must exceed " << threshold << " for gamma = " << p.gamma;
    throw InvalidArgument(msg.str());
  }
  if (!(source_sup_norm >= 0.0)) throw InvalidArgument("source norm must be nonnegative");
  SmallnessReport r;
  r.alpha = 1.0 - threshold / s;
  r.epsilon = epsilon;
  const double l2 = l2_norm(theta0);
  const double hs = sobolev_norm(theta0, s);
  const double l2a = std::pow(l2, r.alpha);
  r.value = l2a * std::pow(hs, 1.0 - r.alpha) + l2a * std::pow(source_sup_norm, 1.0 - r.alpha);
  r.margin = epsilon - r.value;
  r.passed = r.value <= epsilon;
  return r;
}

} // namespace mgslab
