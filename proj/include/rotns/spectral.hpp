#pragma once

#include <limits>

#include "rotns/field.hpp"

namespace rotns {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Relative per-mode tolerance used for the solenoidal invariant.
inline constexpr double kSolenoidalTolerance = 1e-12;

SpectralField to_spectral(const PhysicalField& f);
PhysicalField to_physical(const SpectralField& f);

/// Sets every Nyquist-plane coefficient to zero.
void zero_nyquist(SpectralField& f);
/// Replaces coeff(k) by (coeff(k) + conj(coeff(-k))) / 2.
void enforce_hermitian(SpectralField& f);
/// max over modes of |coeff(k) - conj(coeff(-k))|.
double hermitian_defect(const SpectralField& f);

/// Applies I - k k^T / |k|^2 per mode. coeff(0) passes through unchanged
/// (with a warning if nonzero).
SpectralField leray_project(const SpectralField& u);

/// Multiplies every component by i k_axis, axis in {1, 2, 3}.
SpectralField derivative(const SpectralField& u, int axis);
/// Scalar field sum_c i k_c u_c.
SpectralField divergence(const SpectralField& u);

/// max over modes with u(k) != 0 of |khat . u(k)| / |u(k)|.
double divergence_residual(const SpectralField& u);
bool is_solenoidal(const SpectralField& u, double tol = kSolenoidalTolerance);

/// Zeroes every mode with some |k_i| > n/3.
SpectralField dealias(const SpectralField& u);
bool is_dealiased(const SpectralField& u);

/// Component-wise product computed by collocation, with inputs and output
/// restricted to the 2/3-rule zone. Both fields need the same component count.
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);

/// -P div(u (x) v) evaluated pseudo-spectrally with 2/3-rule dealiasing.
/// The (i) component is -P_i sum_j d_j(u_i v_j). Throws if either input is
/// not solenoidal.
SpectralField bilinear_term(const SpectralField& u, const SpectralField& v);
/// bilinear_term(u, u), using the symmetric product.
SpectralField nonlinear_term(const SpectralField& u);

/// (mean |f|^p)^{1/p} with |.| the Euclidean norm over components; p = inf
/// gives the max over collocation points.
double lp_norm(const PhysicalField& f, double p);
/// Same norm; p = 2 is evaluated by Plancherel, other p on the collocation grid.
double lp_norm(const SpectralField& f, double p);

/// Homogeneous Sobolev norm (sum_k |k|^{2s} |u(k)|^2)^{1/2}; k = 0 excluded.
double sobolev_norm(const SpectralField& u, double s);

/// Real L2 inner product under the normalized measure.
double inner_product(const SpectralField& u, const SpectralField& v);

/// u -> 2^m u(2^m x): mode k moves to 2^m k with amplitude factor 2^m.
SpectralField dyadic_rescale(const SpectralField& u, int m);

/// sqrt(sum |a - b|^2) over all coefficients.
double coefficient_distance(const SpectralField& a, const SpectralField& b);
double coefficient_norm(const SpectralField& a);

}  // namespace rotns
