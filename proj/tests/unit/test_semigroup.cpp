#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "rotns/initial_data.hpp"
#include "rotns/littlewood_paley.hpp"
#include "rotns/semigroup.hpp"

using namespace rotns;

namespace {

FlowParams flow(double nu, double omega) {
  FlowParams p;
  p.nu = nu;
  p.omega = omega;
  return p;
}

double distance(const CVec3& a, const CVec3& b) {
  return norm(CVec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]});
}

}  // namespace

TEST_CASE("single mode at t = pi/2 with omega = 2") {
  const Vec3 k{0, 0, 1};
  const CVec3 a{Complex(1.0, 0.0), Complex{}, Complex{}};
  const double t = std::numbers::pi / 2;
  const CVec3 expected{Complex(-std::exp(-t), 0.0), Complex{}, Complex{}};
  CHECK(std::abs(expected[0].real() + 0.20788) < 1e-5);
  CHECK(distance(semigroup_mode(k, a, t, flow(1.0, 2.0)), expected) < 1e-15);
  CHECK(distance(oracle::closed_form(k, a, t, 1.0, 2.0), expected) < 1e-15);
  CHECK(distance(oracle::rk4(k, a, t, 1.0, 2.0, 10000), expected) < 1e-6 * norm(expected));
  CHECK(distance(mode_oracle(k, a, t, flow(1.0, 2.0), 10000), expected) < 1e-6 * norm(expected));

  const Grid g = make_grid(8);
  const SpectralField u = apply_semigroup(oracle::mode_pair(g, IVec3{0, 0, 1}, a), t, flow(1.0, 2.0));
  CHECK(std::abs(u.at(0, IVec3{0, 0, 1}) - expected[0]) < 1e-15);
}

TEST_CASE("closed form agrees with an independent RK4 on random modes") {
  const Vec3 ks[] = {{1, 2, -3}, {0, 1, 1}, {-2, 0, 5}, {3, -1, 2}};
  const double omegas[] = {0.0, 0.7, 3.0, 8.0};
  for (const Vec3& k : ks) {
    for (double om : omegas) {
      const CVec3 a = oracle::project(k, CVec3{Complex(0.3, -0.2), Complex(-0.5, 0.1), Complex(0.4, 0.6)});
      const CVec3 exact = oracle::rk4(k, a, 0.05, 0.5, om, 10000);
      CHECK(distance(semigroup_mode(k, a, 0.05, flow(0.5, om)), exact) < 1e-6 * norm(exact));
      CHECK(distance(semigroup_mode(k, a, 0.05, flow(0.5, om)), oracle::closed_form(k, a, 0.05, 0.5, om)) <
            1e-14 * norm(a));
    }
  }
}

TEST_CASE("rotation factor is skew-symmetric") {
  const Vec3 k{1.0, -2.0, 2.0};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CVec3 ei{}, ej{};
      ei[i] = 1.0;
      ej[j] = 1.0;
      CHECK(std::abs(rotation_matrix_apply(k, ej)[i] + rotation_matrix_apply(k, ei)[j]) < 1e-15);
    }
  }
}

TEST_CASE("heat reduction, identity at t = 0, and the group property") {
  const Grid g = make_grid(16);
  const SpectralField u0 = random_solenoidal(7, -11.0 / 6.0, 0, 2, g);
  CHECK(apply_semigroup(u0, 0.0, flow(1.0, 3.0)) == u0);
  CHECK_THROWS(apply_semigroup(u0, -0.1, flow(1.0, 3.0)));

  const SpectralField heat = apply_semigroup(u0, 0.2, flow(1.0, 0.0));
  double worst = 0.0;
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    const Vec3 k = g.physical(ki);
    const double d = std::exp(-0.2 * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(heat.at(c, idx) - d * u0.at(c, idx)));
  });
  CHECK(worst < 1e-15);

  CHECK(semigroup_property_check(u0, 0.1, 0.1, flow(1.0, 2.0)) < 1e-12);
  CHECK(semigroup_property_check(u0, 0.0, 0.3, flow(1.0, 2.0)) == 0.0);
}

TEST_CASE("decay fit of a single mode recovers nu exactly") {
  const Grid g = make_grid(16);
  for (int j = 0; j <= 2; ++j) {
    const SpectralField u =
        oracle::mode_pair(g, IVec3{0, 0, 1 << j}, CVec3{Complex(0.5, 0.0), Complex(0.0, 0.5), Complex{}});
    const FlowParams p = flow(0.5, 1.0);
    const DecayFit f = decay_fit(u, j, 2.0, p, default_fit_times(j, p));
    CHECK(std::abs(f.c / p.nu - 1.0) < 1e-6);
    CHECK(std::abs(f.C - 1.0) < 1e-6);
  }
  const SpectralField u = oracle::mode_pair(g, IVec3{0, 0, 2}, CVec3{Complex(0.5, 0.0), Complex{}, Complex{}});
  const std::vector<double> two{0.1, 0.2};
  CHECK_THROWS(decay_fit(u, 1, 2.0, flow(1.0, 1.0), two));
}

TEST_CASE("ring-supported fields decay at a rate within the annulus bounds") {
  const Grid g = make_grid(32);
  const FlowParams p = flow(1.0, 1.0);
  for (int j = 0; j <= 2; ++j) {
    const SpectralField u = random_solenoidal(11 + j, -11.0 / 6.0, j, j, g);
    const DecayFit f = decay_fit(u, j, 2.0, p, default_fit_times(j, p));
    CHECK(f.c >= 0.75 * 0.75 * p.nu * 0.95);
    CHECK(f.c <= (8.0 / 3.0) * (8.0 / 3.0) * p.nu);
  }
}

TEST_CASE("series propagation") {
  const Grid g = make_grid(16);
  const TimeGrid tg{0.5, 8};
  CHECK(series_propagate(SpectralField(g, 3), tg, flow(1.0, 1.0))[8].is_zero());

  const CVec3 a{Complex(0.5, 0.0), Complex{}, Complex{}};
  const SpectralField mode = oracle::mode_pair(g, IVec3{0, 2, 0}, a);
  const FieldSeries s = series_propagate(mode, tg, flow(0.7, 0.0));
  for (int i = 0; i <= tg.M; ++i) {
    CHECK(s[i].at(0, IVec3{0, 2, 0}) == std::exp(-0.7 * 4.0 * tg.node(i)) * a[0]);
  }

  /// The L~^inf norm of a single-block datum never exceeds its hybrid norm.
  const SpectralField one = block(random_solenoidal(5, -11.0 / 6.0, 1, 1, make_grid(32)), 1);
  const FieldSeries os = series_propagate(one, tg, flow(1.0, 1.0));
  CHECK(tilde_norm(os, kInfinity, 0.5, -0.25, 4.0, 1.0) <= 1.0001 * hybrid_norm(one, 0.5, -0.25, 4.0, 1.0));
}
