#pragma once

#include <cstdint>
#include <vector>

#include "rotns/series.hpp"
#include "rotns/spectral.hpp"

namespace rotns {

/// B(u, v)(t) = -int_0^t G(t - tau) P div(u (x) v)(tau) dtau, trapezoidal
/// quadrature on the uniform nodes of `tgrid`. Both series must live on those
/// nodes and on the same grid.
FieldSeries duhamel_bilinear(const FieldSeries& u, const FieldSeries& v, const TimeGrid& tgrid,
                             const FlowParams& params);

/// Quadratic case B(u, u) using the symmetric product.
FieldSeries duhamel_quadratic(const FieldSeries& u, const TimeGrid& tgrid,
                              const FlowParams& params);

struct BilinearProbeOptions {
  int ensemble_size = 10;
  double p = 2.0;
  std::uint64_t seed = 0;
  double amplitude = 1.0;  ///< L2 norm of each random initial field
  int band_lo = 0;
  int band_hi = 1;
  double slope = -11.0 / 6.0;
};

struct BilinearProbeResult {
  double eta = 0.0;  ///< max of the measured ratios
  std::vector<double> ratios;
};

/// max over random solenoidal pairs (u, v) = (G(t)a, G(t)b) of
/// ||B(u, v)||_{E_p,T} / (||u||_{E_p,T} ||v||_{E_p,T}).
BilinearProbeResult bilinear_bound_probe(const Grid& grid, const TimeGrid& tgrid,
                                         const FlowParams& params,
                                         const BilinearProbeOptions& options);

struct PicardReport {
  std::vector<double> iterate_norms;  ///< ||u^n||_{E_p,T}
  std::vector<double> differences;    ///< d_n = ||u^{n+1} - u^n||_{E_p,T}
  std::vector<double> ratios;         ///< d_{n+1} / d_n where d_n > 1e-14
  double data_norm = 0.0;             ///< ||G(t) u0||_{E_p,T}
  double eta_measured = 0.0;          ///< max ||B(u^n, u^n)|| / ||u^n||^2
  double residual = 0.0;              ///< ||u - G(t)u0 - B(u, u)||_{E_p,T}
  int iterations = 0;
  bool converged = false;
};

struct PicardResult {
  FieldSeries solution;
  PicardReport report;
};

/// Fixed-point iteration u^{n+1} = G(t)u0 + B(u^n, u^n) from u^0 = G(t)u0.
/// Stops when d_n < tol, after max_iter iterates, or when the differences
/// grow by more than a factor 2 twice (reported as not converged).
PicardResult picard_solve(const SpectralField& u0, const TimeGrid& tgrid, const FlowParams& params,
                          double p, double tol, int max_iter);

/// Integrating-factor Heun scheme: exact G(h) for the linear part, explicit
/// second-order treatment of the nonlinear term. Throws on a non-finite state.
FieldSeries if_step_integrate(const SpectralField& u0, const TimeGrid& tgrid,
                              const FlowParams& params);

struct GateResult {
  double norm = 0.0;
  bool pass = false;
};

/// Compares hybrid_norm(u0, 1/2, 3/p - 1, p, omega) against params.smallness_c.
GateResult smallness_gate(const SpectralField& u0, double p, const FlowParams& params);

/// L~^inf(H^{1/2}) + E_p.
double fp_norm(const FieldSeries& u, double p, double omega);

struct WeightSpec {
  double c_weight = 1.0;
  double T = 1.0;
};

struct OmegaWeight {
  double e = 0.0;      ///< 1 - exp(-c 4^j T)
  double omega = 0.0;  ///< sup_{k >= j} e_k 2^{(j - k)/2}
};

/// The sup is truncated at k = j + 60.
OmegaWeight omega_weights(int j, const WeightSpec& spec);

/// sup_j omega_{j,T} 2^{j/2} sup_t ||Delta_j v(t)||_2.
double weighted_seminorm(const FieldSeries& v, const WeightSpec& spec);
/// sup_t sup_j 2^{j/2} ||Delta_j u(t)||_2.
double linf_besov_half(const FieldSeries& u);

/// ||B(u, v)||_{L^inf B^{1/2}_{2,inf}} / (||u||_{L^inf B^{1/2}_{2,inf}} weighted_seminorm(v)).
double weighted_bilinear_probe(const FieldSeries& u, const FieldSeries& v, const TimeGrid& tgrid,
                               const FlowParams& params, const WeightSpec& spec);

struct EnergyReport {
  std::vector<double> budget;  ///< ||u(t)||^2 + 2 nu int ||grad u||^2 - ||u0||^2
  std::vector<double> energy;
  std::vector<double> dissipation;
  double initial_energy = 0.0;
  double max_budget = 0.0;
  bool pass = false;
};

/// Energy budget along a series; passes iff max budget <= 1e-4 ||u0||^2.
EnergyReport energy_report(const FieldSeries& u, const FlowParams& params);

}  // namespace rotns
