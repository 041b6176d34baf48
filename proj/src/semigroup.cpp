#include "rotns/semigroup.hpp"

#include <cmath>
#include <stdexcept>

#include "rotns/diagnostics.hpp"

namespace rotns {

CVec3 rotation_matrix_apply(const Vec3& k, const CVec3& a) {
  const double kn = norm(k);
  return {(a[1] * k[2] - a[2] * k[1]) / kn, (a[2] * k[0] - a[0] * k[2]) / kn,
          (a[0] * k[1] - a[1] * k[0]) / kn};
}

CVec3 semigroup_mode(const Vec3& k, const CVec3& a, double t, const FlowParams& params) {
  const double kn = norm(k);
  if (kn == 0.0) return a;
  const double damping = std::exp(-params.nu * kn * kn * t);
  const double theta = params.omega * k[2] * t / kn;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const CVec3 ra = rotation_matrix_apply(k, a);
  return {damping * (c * a[0] + s * ra[0]), damping * (c * a[1] + s * ra[1]),
          damping * (c * a[2] + s * ra[2])};
}

StokesCoriolisPropagator::StokesCoriolisPropagator(const Grid& grid, const FlowParams& params,
                                                   double t)
    : grid_(grid), t_(t) {
  if (!(t >= 0.0)) throw std::invalid_argument("semigroup time must be non-negative");
  damping_.assign(grid.size(), 1.0);
  cos_.assign(grid.size(), 1.0);
  sin_.assign(grid.size(), 0.0);
  for_each_mode(grid, [&](std::size_t idx, const IVec3& ki) {
    if (ki == IVec3{0, 0, 0}) return;
    const Vec3 k = grid.physical(ki);
    const double kn = norm(k);
    const double theta = params.omega * k[2] * t / kn;
    damping_[idx] = std::exp(-params.nu * kn * kn * t);
    cos_[idx] = std::cos(theta);
    sin_[idx] = std::sin(theta);
  });
}

void StokesCoriolisPropagator::apply_in_place(SpectralField& u) const {
  if (!(u.grid() == grid_) || u.components() != 3) {
    throw std::invalid_argument("semigroup expects a vector field on its grid");
  }
  for_each_mode(grid_, [&](std::size_t idx, const IVec3& ki) {
    if (ki == IVec3{0, 0, 0}) return;
    const CVec3 a{u.at(0, idx), u.at(1, idx), u.at(2, idx)};
    const CVec3 ra = rotation_matrix_apply(grid_.physical(ki), a);
    const double d = damping_[idx];
    const double c = cos_[idx];
    const double s = sin_[idx];
    for (int comp = 0; comp < 3; ++comp) u.at(comp, idx) = d * (c * a[comp] + s * ra[comp]);
  });
}

SpectralField StokesCoriolisPropagator::operator()(const SpectralField& u) const {
  SpectralField out = u;
  apply_in_place(out);
  out.set_time(u.time() + t_);
  return out;
}

SpectralField apply_semigroup(const SpectralField& u0, double t, const FlowParams& params) {
  if (!(t >= 0.0)) throw std::invalid_argument("semigroup time must be non-negative");
  if (!u0.mean_free()) warn("apply_semigroup: nonzero mean left unchanged");
  return StokesCoriolisPropagator(u0.grid(), params, t)(u0);
}

double semigroup_property_check(const SpectralField& u0, double t1, double t2,
                                const FlowParams& params) {
  const SpectralField two_step = apply_semigroup(apply_semigroup(u0, t2, params), t1, params);
  const SpectralField one_step = apply_semigroup(u0, t1 + t2, params);
  const double scale = coefficient_norm(u0);
  return scale == 0.0 ? 0.0 : coefficient_distance(two_step, one_step) / scale;
}

CVec3 mode_oracle(const Vec3& k, const CVec3& a0, double t, const FlowParams& params, int steps) {
  const double kn = norm(k);
  if (kn == 0.0) throw std::invalid_argument("mode_oracle requires k != 0");
  if (steps < 100) throw std::invalid_argument("mode_oracle requires steps >= 100");
  const Complex kdota = (k[0] * a0[0] + k[1] * a0[1] + k[2] * a0[2]) / kn;
  if (std::abs(kdota) > kSolenoidalTolerance * norm(a0)) {
    throw std::invalid_argument("mode_oracle: initial amplitude not solenoidal");
  }
  const double k2 = kn * kn;
  auto rhs = [&](const CVec3& a) {
    const CVec3 cross{-a[1], a[0], Complex{}};  // e3 x a
    const Complex kc = (k[0] * cross[0] + k[1] * cross[1] + k[2] * cross[2]) / k2;
    CVec3 out;
    for (int c = 0; c < 3; ++c) {
      out[c] = -params.nu * k2 * a[c] - params.omega * (cross[c] - k[c] * kc);
    }
    return out;
  };
  auto axpy = [](const CVec3& a, double h, const CVec3& b) {
    return CVec3{a[0] + h * b[0], a[1] + h * b[1], a[2] + h * b[2]};
  };
  CVec3 a = a0;
  if (t == 0.0) return a;
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const CVec3 k1 = rhs(a);
    const CVec3 k2v = rhs(axpy(a, 0.5 * h, k1));
    const CVec3 k3 = rhs(axpy(a, 0.5 * h, k2v));
    const CVec3 k4 = rhs(axpy(a, h, k3));
    for (int c = 0; c < 3; ++c) a[c] += h / 6.0 * (k1[c] + 2.0 * k2v[c] + 2.0 * k3[c] + k4[c]);
  }
  return a;
}

std::vector<double> default_fit_times(int j, const FlowParams& params) {
  const double lambda2 = std::ldexp(1.0, 2 * j);
  const double t0 = 0.1 / (params.nu * lambda2);
  const double t1 = 3.0 / (params.nu * lambda2);
  std::vector<double> times(20);
  for (int i = 0; i < 20; ++i) times[i] = t0 + (t1 - t0) * i / 19.0;
  return times;
}

DecayFit decay_fit(const SpectralField& u, int j, double p, const FlowParams& params,
                   std::span<const double> times) {
  if (times.size() < 3) throw std::invalid_argument("decay_fit needs at least 3 times");
  const double lambda = std::ldexp(1.0, j);
  if (p != 2.0 && lambda < params.omega) {
    throw std::invalid_argument("decay_fit: p != 2 requires 2^j >= omega");
  }
  const Grid& g = u.grid();
  bool ring = true;
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    double a2 = 0.0;
    for (int c = 0; c < u.components(); ++c) a2 += std::norm(u.at(c, idx));
    if (a2 == 0.0) return;
    const double kn = norm(g.physical(ki));
    if (kn < 0.75 * lambda * (1.0 - 1e-12) || kn > 8.0 / 3.0 * lambda * (1.0 + 1e-12)) ring = false;
  });
  if (!ring) throw std::invalid_argument("decay_fit: input not ring-supported in block j");
  const double base = lp_norm(u, p);
  if (base == 0.0) throw std::invalid_argument("decay_fit: zero field");

  double st = 0, sy = 0, stt = 0, sty = 0;
  for (double t : times) {
    const double y = std::log(lp_norm(apply_semigroup(u, t, params), p));
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double n = static_cast<double>(times.size());
  const double slope = (n * sty - st * sy) / (n * stt - st * st);
  const double intercept = (sy - slope * st) / n;
  return DecayFit{std::exp(intercept) / base, -slope / (lambda * lambda)};
}

FieldSeries series_propagate(const SpectralField& u0, const TimeGrid& tgrid,
                             const FlowParams& params) {
  tgrid.validate();
  FieldSeries out;
  for (int i = 0; i <= tgrid.M; ++i) {
    const double t = tgrid.node(i);
    SpectralField f = StokesCoriolisPropagator(u0.grid(), params, t)(u0);
    out.push_back(t, std::move(f));
  }
  return out;
}

}  // namespace rotns
