#pragma once

#include <cstdint>

#include "rotns/field.hpp"

namespace rotns {

/// Periodized Gaussian A exp(-|x - c|^2 / (2 w^2)) standing in for a
/// Schwartz envelope. Coefficients are the exact Fourier coefficients of the
/// periodization, truncated to the lattice.
struct EnvelopeSpec {
  double width = 0.0;
  Vec3 center{};
  double amplitude = 1.0;

  /// width in (0, L/4].
  void validate(const Grid& grid) const;
};

/// Default envelope for a grid: width L/4 centered in the box.
EnvelopeSpec default_envelope(const Grid& grid, double amplitude = 1.0);

/// Scalar Fourier coefficients of the envelope (mean included).
SpectralField gaussian_envelope(const EnvelopeSpec& env, const Grid& grid);

/// sin(m x3') (-d2 phi, d1 phi, 0) with x3' = 2*pi x3 / L, i.e. epsilon = 1/m
/// in lattice units. Requires m <= n/4; warns when the oscillation frequency
/// is below omega (epsilon > 1/omega).
SpectralField oscillating_vortex(int m, const EnvelopeSpec& env, const Grid& grid,
                                 double omega = 0.0);

/// e^{i m x1'} phi stored as the real pair (cos(m x1') phi, sin(m x1') phi);
/// coeff(0) is removed. Same preconditions as oscillating_vortex.
SpectralField modulated_scalar(int m, const EnvelopeSpec& env, const Grid& grid,
                               double omega = 0.0);

/// Random solenoidal field: complex Gaussian amplitudes shaped |k|^slope on
/// 2^{j_lo} <= |k| < 2^{j_hi+1} inside the 2/3-rule zone, Leray-projected and
/// Hermitian. Amplitudes are keyed by (seed, k) so the same seed gives the
/// same function on every grid that resolves the band.
SpectralField random_solenoidal(std::uint64_t seed, double slope, int j_lo, int j_hi,
                                const Grid& grid);

/// Scalar analogue of random_solenoidal.
SpectralField random_scalar(std::uint64_t seed, double slope, int j_lo, int j_hi,
                            const Grid& grid);

/// Deterministic 64-bit mixing of a seed with a stream index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace rotns
