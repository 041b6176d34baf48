#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "rotns/diagnostics.hpp"
#include "rotns/initial_data.hpp"
#include "rotns/spectral.hpp"

using namespace rotns;

namespace {

SpectralField cos3x1(const Grid& g) {
  PhysicalField f(g, 1);
  f.fill(0, [](const Vec3& x) { return std::cos(3.0 * x[0]); });
  return to_spectral(f);
}

}  // namespace

TEST_CASE("grid rejects sizes that are not powers of two") {
  CHECK_THROWS_WITH_AS(make_grid(12), doctest::Contains("n not a power of two"), std::invalid_argument);
  CHECK_THROWS(make_grid(4));
  CHECK(make_grid(16).n() == 16);
}

TEST_CASE("forward transform matches a direct DFT on 8^3") {
  const Grid g = make_grid(8);
  PhysicalField f(g, 1);
  f.fill(0, [](const Vec3& x) {
    return std::sin(x[0] + 2.0 * x[1]) * std::cos(x[2]) + 0.3 * std::cos(3.0 * x[1] - x[2]) +
           0.1 * std::exp(std::sin(x[0] - x[2]));
  });
  const SpectralField s = to_spectral(f);
  double worst = 0.0;
  for_each_mode(g, [&](std::size_t idx, const IVec3& k) {
    const Complex expected = g.nyquist(k) ? Complex{} : oracle::naive_dft(f, 0, k);
    worst = std::max(worst, std::abs(s.at(0, idx) - expected));
  });
  CHECK(worst < 1e-13);
}

TEST_CASE("round trip through physical space") {
  const Grid g = make_grid(16);
  const SpectralField u = random_solenoidal(3, -11.0 / 6.0, 0, 2, g);
  const SpectralField back = to_spectral(to_physical(u));
  CHECK(coefficient_distance(u, back) < 1e-14 * coefficient_norm(u));
  CHECK(hermitian_defect(u) < 1e-15);
}

TEST_CASE("leray projection of single modes") {
  const Grid g = make_grid(8);
  SUBCASE("k = (1,0,0), u = (1,1,0)") {
    SpectralField u(g, 3);
    u.at(0, IVec3{1, 0, 0}) = 1.0;
    u.at(1, IVec3{1, 0, 0}) = 1.0;
    const SpectralField p = leray_project(u);
    CHECK(std::abs(p.at(0, IVec3{1, 0, 0})) < 1e-15);
    CHECK(std::abs(p.at(1, IVec3{1, 0, 0}) - 1.0) < 1e-15);
    CHECK(std::abs(p.at(2, IVec3{1, 0, 0})) < 1e-15);
  }
  SUBCASE("k = (1,1,0), u = (1,0,0)") {
    SpectralField u(g, 3);
    u.at(0, IVec3{1, 1, 0}) = 1.0;
    const SpectralField p = leray_project(u);
    CHECK(std::abs(p.at(0, IVec3{1, 1, 0}) - 0.5) < 1e-15);
    CHECK(std::abs(p.at(1, IVec3{1, 1, 0}) + 0.5) < 1e-15);
    CHECK(std::abs(p.at(2, IVec3{1, 1, 0})) < 1e-15);
  }
  SUBCASE("projection is idempotent and solenoidal") {
    SpectralField w(g, 3);
    for (int c = 0; c < 3; ++c) {
      const SpectralField s = random_scalar(10 + c, 0.0, 0, 1, g);
      std::copy(s.component(0).begin(), s.component(0).end(), w.component(c).begin());
    }
    const SpectralField p = leray_project(w);
    CHECK(is_solenoidal(p));
    CHECK(coefficient_distance(leray_project(p), p) < 1e-14 * coefficient_norm(p));
  }
}

TEST_CASE("L^p norms of cos(3 x1) under the normalized measure") {
  const SpectralField f = cos3x1(make_grid(32));
  CHECK(std::abs(lp_norm(f, 2.0) - 0.70711) < 1e-3);
  CHECK(std::abs(lp_norm(f, 4.0) - 0.78254) < 1e-3);
  CHECK(std::abs(lp_norm(f, kInfinity) - 1.0) < 1e-3);
  CHECK(lp_norm(f, 4.0) == doctest::Approx(std::pow(3.0 / 8.0, 0.25)).epsilon(1e-12));
}

TEST_CASE("nonlinear term matches a brute-force convolution") {
  const Grid g = make_grid(16);
  SpectralField u = dealias(random_solenoidal(21, -11.0 / 6.0, 0, 2, g));
  u = leray_project(u);
  const SpectralField got = nonlinear_term(u);
  const SpectralField expected = oracle::convolution_nonlinear(u);
  CHECK(coefficient_distance(got, expected) < 1e-10 * coefficient_norm(expected));
  CHECK(is_dealiased(got));
  CHECK(divergence_residual(got) < 1e-12);
}

TEST_CASE("bilinear term is symmetric in the quadratic case and rejects divergent input") {
  const Grid g = make_grid(16);
  const SpectralField u = random_solenoidal(4, -11.0 / 6.0, 0, 1, g);
  const SpectralField v = random_solenoidal(5, -11.0 / 6.0, 0, 1, g);
  CHECK(coefficient_distance(bilinear_term(u, u), nonlinear_term(u)) <
        1e-13 * coefficient_norm(nonlinear_term(u)));
  SpectralField bad(g, 3);
  bad.at(0, IVec3{1, 0, 0}) = 1.0;
  bad.at(0, IVec3{-1, 0, 0}) = 1.0;
  CHECK_THROWS_AS(bilinear_term(bad, v), std::invalid_argument);
}

TEST_CASE("energy neutrality of the dealiased nonlinearity") {
  const Grid g = make_grid(16);
  const SpectralField u = random_solenoidal(8, -11.0 / 6.0, 0, 2, g);
  CHECK(std::abs(inner_product(nonlinear_term(u), u)) < 1e-12 * lp_norm(u, 2.0) * lp_norm(nonlinear_term(u), 2.0));
}

TEST_CASE("dyadic rescale moves modes and scales the H^1/2 norm") {
  const Grid g = make_grid(16);
  SpectralField u = oracle::mode_pair(g, IVec3{0, 0, 2}, CVec3{Complex(0.3, 0.1), Complex(0.2, 0.0), Complex{}});
  const SpectralField r = dyadic_rescale(u, 1);
  CHECK(r.at(0, IVec3{0, 0, 4}) == 2.0 * u.at(0, IVec3{0, 0, 2}));
  CHECK(r.at(1, IVec3{0, 0, 4}) == 2.0 * u.at(1, IVec3{0, 0, 2}));
  CHECK(r.at(0, IVec3{0, 0, 2}) == Complex{});
  /// On the torus the normalized measure gives the factor 2^{3m/2}.
  CHECK(sobolev_norm(r, 0.5) / sobolev_norm(u, 0.5) == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-13));
}

TEST_CASE("sobolev norm and inner product of a single mode") {
  const Grid g = make_grid(16);
  const SpectralField u = oracle::mode_pair(g, IVec3{0, 3, 4}, CVec3{Complex(1.0, 0.0), Complex{}, Complex{}});
  CHECK(sobolev_norm(u, 1.0) == doctest::Approx(5.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(inner_product(u, u) == doctest::Approx(2.0).epsilon(1e-14));
}
