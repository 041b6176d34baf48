#include "rotns/mild_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rotns/diagnostics.hpp"
#include "rotns/initial_data.hpp"
#include "rotns/littlewood_paley.hpp"
#include "rotns/semigroup.hpp"

namespace rotns {

namespace {

void check_on_nodes(const FieldSeries& u, const TimeGrid& tgrid, const char* what) {
  tgrid.validate();
  if (u.size() != static_cast<std::size_t>(tgrid.M) + 1) {
    throw std::invalid_argument(std::string(what) + ": series does not match the time grid");
  }
  const double tol = 1e-12 * tgrid.T;
  for (int i = 0; i <= tgrid.M; ++i) {
    if (std::abs(u.times()[i] - tgrid.node(i)) > tol) {
      throw std::invalid_argument(std::string(what) + ": series does not match the time grid");
    }
  }
}

/// Trapezoidal Duhamel sum driven by the forcing values F_i:
/// S_0 = F_0 / 2, S_i = G(h) S_{i-1} + F_i, B_i = h (S_i - F_i / 2).
template <class Forcing>
FieldSeries duhamel_sum(const Grid& grid, const TimeGrid& tgrid, const FlowParams& params,
                        Forcing&& forcing) {
  const double h = tgrid.step();
  const StokesCoriolisPropagator step(grid, params, h);
  FieldSeries out;
  SpectralField f = forcing(0);
  SpectralField acc = 0.5 * f;
  out.push_back(0.0, SpectralField(grid, 3));
  for (int i = 1; i <= tgrid.M; ++i) {
    f = forcing(i);
    step.apply_in_place(acc);
    acc += f;
    SpectralField b = acc;
    b.axpy(-0.5, f);
    b *= h;
    out.push_back(tgrid.node(i), std::move(b));
  }
  return out;
}

bool all_finite(const SpectralField& u) {
  return std::all_of(u.data().begin(), u.data().end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool all_finite(const FieldSeries& u) {
  return std::all_of(u.fields().begin(), u.fields().end(),
                     [](const SpectralField& f) { return all_finite(f); });
}

/// Cumulative integral of samples f on the nodes. Uniform nodes get the
/// endpoint-corrected trapezoid rule (fourth order), others the plain rule.
std::vector<double> cumulative_integral(const std::vector<double>& t, const std::vector<double>& f) {
  const std::size_t n = t.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (f[i] + f[i - 1]);
  if (n < 3) return out;
  const double h = t[1] - t[0];
  for (std::size_t i = 2; i < n; ++i) {
    if (std::abs(t[i] - t[i - 1] - h) > 1e-12 * std::abs(t.back())) return out;
  }
  const double d0 = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (std::size_t i = 2; i < n; ++i) {
    const double di = (3.0 * f[i] - 4.0 * f[i - 1] + f[i - 2]) / (2.0 * h);
    out[i] -= h * h / 12.0 * (di - d0);
  }
  return out;
}

}  // namespace

FieldSeries duhamel_bilinear(const FieldSeries& u, const FieldSeries& v, const TimeGrid& tgrid,
                             const FlowParams& params) {
  check_on_nodes(u, tgrid, "duhamel_bilinear");
  check_on_nodes(v, tgrid, "duhamel_bilinear");
  if (!(u.grid() == v.grid())) throw std::invalid_argument("duhamel_bilinear: mismatched grids");
  return duhamel_sum(u.grid(), tgrid, params,
                     [&](int i) { return bilinear_term(u[i], v[i]); });
}

FieldSeries duhamel_quadratic(const FieldSeries& u, const TimeGrid& tgrid,
                              const FlowParams& params) {
  check_on_nodes(u, tgrid, "duhamel_quadratic");
  return duhamel_sum(u.grid(), tgrid, params, [&](int i) { return nonlinear_term(u[i]); });
}

BilinearProbeResult bilinear_bound_probe(const Grid& grid, const TimeGrid& tgrid,
                                         const FlowParams& params,
                                         const BilinearProbeOptions& options) {
  if (options.ensemble_size < 10) throw std::invalid_argument("ensemble_size must be >= 10");
  BilinearProbeResult result;
  for (int s = 0; s < options.ensemble_size; ++s) {
    auto sample = [&](std::uint64_t stream) {
      SpectralField a = random_solenoidal(derive_seed(options.seed, stream), options.slope,
                                          options.band_lo, options.band_hi, grid);
      const double l2 = lp_norm(a, 2.0);
      if (l2 > 0.0) a *= options.amplitude / l2;
      return series_propagate(a, tgrid, params);
    };
    const FieldSeries u = sample(2 * static_cast<std::uint64_t>(s));
    const FieldSeries v = sample(2 * static_cast<std::uint64_t>(s) + 1);
    const double nu = ep_norm(u, options.p, params.omega);
    const double nv = ep_norm(v, options.p, params.omega);
    if (!(nu > 0.0) || !(nv > 0.0)) continue;
    const double nb = ep_norm(duhamel_bilinear(u, v, tgrid, params), options.p, params.omega);
    const double ratio = nb / (nu * nv);
    result.ratios.push_back(ratio);
    result.eta = std::max(result.eta, ratio);
  }
  return result;
}

PicardResult picard_solve(const SpectralField& u0, const TimeGrid& tgrid, const FlowParams& params,
                          double p, double tol, int max_iter) {
  tgrid.validate();
  if (u0.components() != 3) throw std::invalid_argument("picard_solve expects a vector field");
  if (!is_solenoidal(u0)) throw std::invalid_argument("picard_solve: input not solenoidal");
  if (!u0.mean_free()) throw std::invalid_argument("picard_solve: input has a nonzero mean");
  if (!(tol > 0.0) || max_iter < 1) throw std::invalid_argument("picard_solve: bad tol or max_iter");

  const double omega = params.omega;
  const FieldSeries y = series_propagate(u0, tgrid, params);
  PicardReport report;
  report.data_norm = ep_norm(y, p, omega);

  FieldSeries u = y;
  int growth = 0;
  bool finite = true;
  for (int n = 0; n < max_iter; ++n) {
    const double un = ep_norm(u, p, omega);
    report.iterate_norms.push_back(un);
    if (!std::isfinite(un)) {
      finite = false;
      report.iterations = n;
      break;
    }
    FieldSeries b;
    try {
      b = duhamel_quadratic(u, tgrid, params);
    } catch (const std::invalid_argument&) {
      /// Overflow inside the product of a finite but huge iterate.
      finite = false;
      report.iterations = n + 1;
      break;
    }
    if (un > 0.0) report.eta_measured = std::max(report.eta_measured, ep_norm(b, p, omega) / (un * un));
    FieldSeries next = y + b;
    if (!all_finite(next)) {
      finite = false;
      report.iterations = n + 1;
      break;
    }
    const double d = ep_norm(next - u, p, omega);
    if (!report.differences.empty()) {
      const double prev = report.differences.back();
      if (prev > 1e-14) report.ratios.push_back(d / prev);
      if (d > 2.0 * prev) ++growth;
    }
    report.differences.push_back(d);
    u = std::move(next);
    report.iterations = n + 1;
    if (!std::isfinite(d)) {
      finite = false;
      break;
    }
    if (d < tol) {
      report.converged = true;
      break;
    }
    if (growth >= 2) break;
  }
  report.residual = kInfinity;
  if (finite) {
    try {
      report.residual = ep_norm(u - y - duhamel_quadratic(u, tgrid, params), p, omega);
    } catch (const std::invalid_argument&) {
    }
  }
  return PicardResult{std::move(u), std::move(report)};
}

FieldSeries if_step_integrate(const SpectralField& u0, const TimeGrid& tgrid,
                              const FlowParams& params) {
  tgrid.validate();
  if (u0.components() != 3) throw std::invalid_argument("if_step_integrate expects a vector field");
  if (!is_solenoidal(u0)) throw std::invalid_argument("if_step_integrate: input not solenoidal");
  const Grid& g = u0.grid();
  const double umax = lp_norm(u0, kInfinity);
  if (tgrid.M < tgrid.T * g.n() * umax / g.length()) {
    warn("if_step_integrate: step count below the CFL-type recommendation");
  }
  const double h = tgrid.step();
  const StokesCoriolisPropagator step(g, params, h);
  FieldSeries out;
  SpectralField u = u0;
  out.push_back(0.0, u);
  for (int i = 1; i <= tgrid.M; ++i) {
    const SpectralField nu = nonlinear_term(u);
    SpectralField v = u;
    v.axpy(h, nu);
    step.apply_in_place(v);
    SpectralField next = u;
    next.axpy(0.5 * h, nu);
    step.apply_in_place(next);
    next.axpy(0.5 * h, nonlinear_term(v));
    if (!all_finite(next)) {
      throw std::runtime_error("if_step_integrate: non-finite state at step " + std::to_string(i));
    }
    u = std::move(next);
    out.push_back(tgrid.node(i), u);
  }
  return out;
}

GateResult smallness_gate(const SpectralField& u0, double p, const FlowParams& params) {
  GateResult r;
  r.norm = hybrid_norm(u0, 0.5, 3.0 / p - 1.0, p, params.omega);
  r.pass = r.norm <= params.smallness_c;
  return r;
}

double fp_norm(const FieldSeries& u, double p, double omega) {
  return tilde_sobolev_norm(u, 0.5) + ep_norm(u, p, omega);
}

OmegaWeight omega_weights(int j, const WeightSpec& spec) {
  if (!(spec.c_weight > 0.0)) throw std::invalid_argument("c_weight must be positive");
  if (!(spec.T >= 0.0)) throw std::invalid_argument("weight horizon T must be non-negative");
  auto e_at = [&](int k) { return -std::expm1(-spec.c_weight * std::ldexp(spec.T, 2 * k)); };
  OmegaWeight w;
  w.e = e_at(j);
  for (int k = j; k <= j + 60; ++k) {
    const double e = e_at(k);
    w.omega = std::max(w.omega, e * std::pow(2.0, 0.5 * (j - k)));
    if (e == 1.0) break;
  }
  return w;
}

double weighted_seminorm(const FieldSeries& v, const WeightSpec& spec) {
  const auto norms = series_block_norms(v, 2.0, kInfinity);
  const BlockNorms& first = norms.front();
  double out = 0.0;
  for (int j = first.j_min; j <= first.j_max(); ++j) {
    double sup_t = 0.0;
    for (const auto& bn : norms) sup_t = std::max(sup_t, bn.l2_at(j));
    out = std::max(out, omega_weights(j, spec).omega * std::pow(2.0, 0.5 * j) * sup_t);
  }
  return out;
}

double linf_besov_half(const FieldSeries& u) {
  const auto norms = series_block_norms(u, 2.0, kInfinity);
  double out = 0.0;
  for (const auto& bn : norms) {
    for (int j = bn.j_min; j <= bn.j_max(); ++j) {
      out = std::max(out, std::pow(2.0, 0.5 * j) * bn.l2_at(j));
    }
  }
  return out;
}

double weighted_bilinear_probe(const FieldSeries& u, const FieldSeries& v, const TimeGrid& tgrid,
                               const FlowParams& params, const WeightSpec& spec) {
  if (u.empty() || v.empty()) throw std::invalid_argument("weighted_bilinear_probe: empty series");
  const double right = linf_besov_half(u) * weighted_seminorm(v, spec);
  if (!(right > 0.0)) throw std::invalid_argument("weighted_bilinear_probe: zero right side");
  return linf_besov_half(duhamel_bilinear(u, v, tgrid, params)) / right;
}

EnergyReport energy_report(const FieldSeries& u, const FlowParams& params) {
  if (u.empty()) throw std::invalid_argument("energy_report: empty series");
  EnergyReport r;
  const std::size_t n = u.size();
  r.energy.resize(n);
  std::vector<double> rate(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double l2 = lp_norm(u[i], 2.0);
    const double grad = sobolev_norm(u[i], 1.0);
    r.energy[i] = l2 * l2;
    rate[i] = 2.0 * params.nu * grad * grad;
  }
  r.dissipation = cumulative_integral(u.times(), rate);
  r.initial_energy = r.energy.front();
  r.budget.resize(n);
  r.max_budget = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r.budget[i] = r.energy[i] + r.dissipation[i] - r.initial_energy;
    r.max_budget = std::max(r.max_budget, r.budget[i]);
  }
  r.pass = r.max_budget <= 1e-4 * r.initial_energy;
  return r;
}

}  // namespace rotns
