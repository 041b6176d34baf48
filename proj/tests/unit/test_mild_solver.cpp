#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "rotns/diagnostics.hpp"
#include "rotns/initial_data.hpp"
#include "rotns/littlewood_paley.hpp"
#include "rotns/mild_solver.hpp"
#include "rotns/semigroup.hpp"

using namespace rotns;

namespace {

SpectralField unit_field(std::uint64_t seed, const Grid& g, double amplitude = 1.0) {
  SpectralField u = random_solenoidal(seed, -11.0 / 6.0, 0, 1, g);
  u *= amplitude / lp_norm(u, 2.0);
  return u;
}

FlowParams flow(double nu, double omega) {
  FlowParams p;
  p.nu = nu;
  p.omega = omega;
  return p;
}

SpectralField duhamel_end(const SpectralField& u0, double T, int M, const FlowParams& p) {
  const TimeGrid tg{T, M};
  const FieldSeries y = series_propagate(u0, tg, p);
  return duhamel_quadratic(y, tg, p)[M];
}

SpectralField if_end(const SpectralField& u0, double T, int M, const FlowParams& p) {
  return if_step_integrate(u0, TimeGrid{T, M}, p)[M];
}

}  // namespace

TEST_CASE("Duhamel operator vanishes at t = 0, is bilinear and solenoidal") {
  const Grid g = make_grid(16);
  const TimeGrid tg{0.25, 8};
  const FlowParams p = flow(1.0, 1.0);
  const FieldSeries u = series_propagate(unit_field(1, g), tg, p);
  const FieldSeries v = series_propagate(unit_field(2, g), tg, p);
  const FieldSeries b = duhamel_bilinear(u, v, tg, p);
  CHECK(b[0].is_zero());
  CHECK(divergence_residual(b[tg.M]) < 1e-12);
  const FieldSeries b2 = duhamel_bilinear(u.scaled(2.0), v, tg, p);
  CHECK(coefficient_distance(b2[tg.M], 2.0 * b[tg.M]) < 1e-13 * coefficient_norm(b[tg.M]));
  const FieldSeries bq = duhamel_quadratic(u, tg, p);
  const FieldSeries bu = duhamel_bilinear(u, u, tg, p);
  CHECK(coefficient_distance(bq[tg.M], bu[tg.M]) < 1e-13 * coefficient_norm(bu[tg.M]));
}

TEST_CASE("Duhamel quadrature converges at second order") {
  const Grid g = make_grid(16);
  const FlowParams p = flow(1.0, 2.0);
  const SpectralField u0 = unit_field(3, g, 0.5);
  const SpectralField b8 = duhamel_end(u0, 0.25, 8, p);
  const SpectralField b16 = duhamel_end(u0, 0.25, 16, p);
  const SpectralField b32 = duhamel_end(u0, 0.25, 32, p);
  const double ratio = coefficient_distance(b8, b16) / coefficient_distance(b16, b32);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("integrating-factor scheme converges at second order") {
  const Grid g = make_grid(16);
  const FlowParams p = flow(1.0, 2.0);
  const SpectralField u0 = unit_field(4, g, 0.5);
  const SpectralField a = if_end(u0, 0.25, 8, p);
  const SpectralField b = if_end(u0, 0.25, 16, p);
  const SpectralField c = if_end(u0, 0.25, 32, p);
  const double ratio = coefficient_distance(a, b) / coefficient_distance(b, c);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("integrating-factor scheme reduces to the semigroup for tiny data") {
  const Grid g = make_grid(16);
  const FlowParams p = flow(1.0, 1.0);
  const SpectralField u0 = unit_field(5, g, 1e-6);
  const TimeGrid tg{0.5, 16};
  const FieldSeries nl = if_step_integrate(u0, tg, p);
  const FieldSeries lin = series_propagate(u0, tg, p);
  for (int i = 0; i <= tg.M; ++i) {
    CHECK(coefficient_distance(nl[i], lin[i]) < 1e-6 * coefficient_norm(u0));
  }
}

TEST_CASE("Picard iteration") {
  const Grid g = make_grid(16);
  const FlowParams p = flow(1.0, 1.0);
  const TimeGrid tg{0.25, 16};
  SUBCASE("zero data converges immediately") {
    const PicardResult r = picard_solve(SpectralField(g, 3), tg, p, 2.0, 1e-10, 10);
    CHECK(r.report.converged);
    CHECK(r.report.iterations == 1);
    CHECK(r.solution[tg.M].is_zero());
  }
  SUBCASE("small data contracts and matches the integrating-factor scheme") {
    const SpectralField u0 = unit_field(6, g, 0.05);
    const PicardResult r = picard_solve(u0, tg, p, 2.0, 1e-10, 30);
    CHECK(r.report.converged);
    CHECK(r.report.residual < 1e-9);
    for (double ratio : r.report.ratios) CHECK(ratio < 0.5);
    const FieldSeries ifs = if_step_integrate(u0, tg, p);
    CHECK(tilde_sobolev_norm(r.solution - ifs, 0.5) < 1e-6 * tilde_sobolev_norm(r.solution, 0.5));
  }
  SUBCASE("invalid input") {
    SpectralField bad(g, 3);
    bad.at(0, IVec3{1, 0, 0}) = 1.0;
    bad.at(0, IVec3{-1, 0, 0}) = 1.0;
    CHECK_THROWS_AS(picard_solve(bad, tg, p, 2.0, 1e-10, 10), std::invalid_argument);
    CHECK_THROWS_AS(picard_solve(SpectralField(g, 3), tg, p, 2.0, 0.0, 10), std::invalid_argument);
  }
}

TEST_CASE("bilinear probe is deterministic and scale invariant") {
  const Grid g = make_grid(16);
  const TimeGrid tg{0.25, 8};
  const FlowParams p = flow(1.0, 1.0);
  BilinearProbeOptions opt;
  opt.seed = 9;
  const BilinearProbeResult a = bilinear_bound_probe(g, tg, p, opt);
  const BilinearProbeResult b = bilinear_bound_probe(g, tg, p, opt);
  CHECK(a.eta == b.eta);
  CHECK(a.ratios.size() == 10);
  CHECK(std::isfinite(a.eta));
  CHECK(a.eta > 0.0);
  opt.amplitude = 3.0;
  const BilinearProbeResult c = bilinear_bound_probe(g, tg, p, opt);
  CHECK(c.eta == doctest::Approx(a.eta).epsilon(1e-10));
}

TEST_CASE("smallness gate") {
  const Grid g = make_grid(16);
  FlowParams p = flow(1.0, 1.0);
  p.smallness_c = 0.05;
  CHECK(smallness_gate(SpectralField(g, 3), 2.0, p).pass);
  const GateResult big = smallness_gate(unit_field(1, g, 10.0), 2.0, p);
  CHECK_FALSE(big.pass);
  CHECK(big.norm > p.smallness_c);
}

TEST_CASE("omega weights") {
  const WeightSpec half{1.0, std::log(2.0)};
  const OmegaWeight w = omega_weights(0, half);
  CHECK(w.e == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(w.omega - 0.66291) < 1e-5);
  CHECK(w.omega == doctest::Approx(15.0 / 16.0 / std::sqrt(2.0)).epsilon(1e-14));
  const OmegaWeight inf = omega_weights(0, WeightSpec{1.0, kInfinity});
  CHECK(inf.e == 1.0);
  CHECK(inf.omega == 1.0);
  const OmegaWeight zero = omega_weights(0, WeightSpec{1.0, 0.0});
  CHECK(zero.e == 0.0);
  CHECK(zero.omega == 0.0);
  for (int j = -5; j <= 10; ++j) {
    const OmegaWeight a = omega_weights(j, WeightSpec{1.0, 0.01});
    const OmegaWeight b = omega_weights(j + 1, WeightSpec{1.0, 0.01});
    CHECK(a.e <= a.omega);
    CHECK(a.omega <= 1.0);
    CHECK(a.omega <= b.omega * (1.0 + 1e-14));
  }
}

TEST_CASE("energy report on a linear evolution") {
  const Grid g = make_grid(16);
  const FlowParams p = flow(1.0, 1.0);
  const FieldSeries s = series_propagate(unit_field(2, g), TimeGrid{1.0, 256}, p);
  const EnergyReport er = energy_report(s, p);
  CHECK(er.pass);
  CHECK(er.initial_energy == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(er.max_budget <= 1e-4);
  CHECK(er.budget.size() == s.size());
}
