#pragma once

#include <span>
#include <vector>

#include "rotns/series.hpp"
#include "rotns/spectral.hpp"

namespace rotns {

/// The Stokes-Coriolis semigroup G(t) on one grid as a per-mode multiplier:
///
///   G(t) a = e^{-nu |k|^2 t} [cos(theta) a + sin(theta) R(k) a],
///   theta  = omega k3 t / |k|,   R(k) a = (a x k) / |k|.
///
/// The k = 0 coefficient is left unchanged.
class StokesCoriolisPropagator {
 public:
  StokesCoriolisPropagator(const Grid& grid, const FlowParams& params, double t);

  double time() const noexcept { return t_; }
  void apply_in_place(SpectralField& u) const;
  SpectralField operator()(const SpectralField& u) const;

 private:
  Grid grid_;
  double t_;
  std::vector<double> damping_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

/// R(k) a for a wavevector k != 0.
CVec3 rotation_matrix_apply(const Vec3& k, const CVec3& a);

/// Closed-form G(t) acting on a single mode.
CVec3 semigroup_mode(const Vec3& k, const CVec3& a, double t, const FlowParams& params);

/// G(t) u0. Throws for t < 0; warns if u0 has a nonzero mean.
SpectralField apply_semigroup(const SpectralField& u0, double t, const FlowParams& params);

/// ||G(t1) G(t2) u0 - G(t1 + t2) u0||_2 / ||u0||_2.
double semigroup_property_check(const SpectralField& u0, double t1, double t2,
                                const FlowParams& params);

/// Classical RK4 integration of a' = -nu|k|^2 a - omega P(k)(e3 x a) for one
/// mode; an independent check of the closed form.
CVec3 mode_oracle(const Vec3& k, const CVec3& a0, double t, const FlowParams& params, int steps);

struct DecayFit {
  double C = 0.0;  ///< exp(intercept) / ||u||_p
  double c = 0.0;  ///< -slope / lambda^2
};

/// Log-linear least-squares fit of ||G(t) u||_p against t, lambda = 2^j.
/// u must be supported in the ring 3/4 lambda <= |k| <= 8/3 lambda; p != 2
/// additionally needs 2^j >= omega.
DecayFit decay_fit(const SpectralField& u, int j, double p, const FlowParams& params,
                   std::span<const double> times);

/// 20 samples on [0.1, 3] / (nu lambda^2).
std::vector<double> default_fit_times(int j, const FlowParams& params);

/// Series G(t_i) u0 on the nodes of `tgrid`.
FieldSeries series_propagate(const SpectralField& u0, const TimeGrid& tgrid,
                             const FlowParams& params);

}  // namespace rotns
