#pragma once

#include <array>
#include <span>
#include <vector>

#include "mgslab/params.hpp"
#include "mgslab/spectral_field.hpp"

namespace mgslab {

/// Values of the three MG multipliers at one wavevector.
struct SymbolValue {
  double m1 = 0.0, m2 = 0.0, m3 = 0.0;

  double norm() const;
  double divergence(const Wavevector& k) const;
};

/// The explicit MG constitutive symbols. Throws InvalidArgument for k3 == 0,
/// where they are undefined.
SymbolValue mg_symbol(const Wavevector& k, const Params& p);

using VectorField = std::array<SpectralField, 3>;

/// U_j = M_j Theta, mode by mode; zero on k3 = 0.
VectorField velocity_from_scalar(const SpectralField& theta, const Params& p);

/// b_j = (beta/eta) (-Delta)^-1 d_2 M_j Theta; zero on k3 = 0.
VectorField magnetic_perturbation(const SpectralField& theta, const Params& p);

/// max_k |sum_j k_j v_j(k)| over stored modes (the spectral divergence up to i).
double spectral_divergence_max(const VectorField& v);

/// max over {|k_j| <= K, k3 != 0, k != 0} of |M(k)| / |k|.
double symbol_linear_bound_constant(int cutoff, const Params& p);

/// max over {|k_j| <= K, k3 != 0} of max_j |M_j(k)| (no division by |k|).
double symbol_sup(int cutoff, const Params& p);

/// max over {|k_j| <= K, k3 != 0} of |k . M(k)|.
double max_divergence_residual(int cutoff, const Params& p);

/// max over {|k_j| <= K, k3 != 0} of max_j |M_j(k) - M_j(-k)|.
double max_evenness_defect(int cutoff, const Params& p);

enum class CurveRounding { Nearest, Floor };

struct GrowthExponents {
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;
};

/// Least-squares log-log slopes of |M_j| along (k1, round(k1^r), 1).
/// Requires r in (0, 1/2], at least 4 strictly increasing k1 values >= 16.
GrowthExponents anisotropy_probe(double r, std::span<const int> k1_values, const Params& p,
                                 CurveRounding rounding = CurveRounding::Nearest);

/// max over {k in P_q : |k_j| <= K, k3 != 0} of max_j |M_j(k)|.
double plane_bound_constant(const FrequencyPlane& plane, int cutoff, const Params& p);

} // namespace mgslab
