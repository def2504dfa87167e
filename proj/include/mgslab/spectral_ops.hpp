#pragma once

#include "mgslab/spectral_field.hpp"

namespace mgslab {

class FrequencyPlane;

/// 2/3 rule: zero every coefficient with |k_j| > n_j/3 on any axis.
SpectralField dealias(SpectralField f);

/// Zero every coefficient with k3 = 0.
SpectralField project_zero_vertical_mean(SpectralField f);

/// Multiply by |k|^(2 gamma); coeff(0) = 0. gamma must lie in (0, 1].
SpectralField fractional_laplacian(SpectralField f, double gamma);

/// ( sum_{k != 0} |k|^(2s) |coeff(k)|^2 )^(1/2).
double sobolev_norm(const SpectralField& f, double s);

/// Volume-averaged L2 norm including the mean mode.
double l2_norm(const SpectralField& f);

/// max over stored modes of |coeff(k)|.
double max_abs_coeff(const SpectralField& f);

/// Energy off the plane divided by total energy (0 for the zero field).
double off_plane_fraction(const SpectralField& f, const FrequencyPlane& plane);

/// Zero every coefficient off the plane.
SpectralField restrict_to_plane(SpectralField f, const FrequencyPlane& plane);

/// Energy fraction in the outer third of the dealiased band: modes with
/// |k_j| > (2/3) * (n_j/3) on some axis.
double outer_band_fraction(const SpectralField& f);

/// True when coeff(0) == 0 and all k3 = 0 coefficients vanish.
bool has_zero_vertical_mean(const SpectralField& f);

/// Largest |coeff(k) - conj(coeff(-k))| over the stored Hermitian planes.
double hermitian_defect(const SpectralField& f);

} // namespace mgslab
