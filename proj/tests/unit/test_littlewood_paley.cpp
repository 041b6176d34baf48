#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "rotns/diagnostics.hpp"
#include "rotns/initial_data.hpp"
#include "rotns/littlewood_paley.hpp"
#include "rotns/semigroup.hpp"

using namespace rotns;

namespace {

SpectralField cos3x1(const Grid& g) {
  return oracle::mode_pair(g, IVec3{3, 0, 0}, CVec3{Complex(0.5, 0.0), Complex{}, Complex{}}, 1);
}

}  // namespace

TEST_CASE("cutoff and block profiles") {
  CHECK(DyadicPartition::chi(0.5) == 1.0);
  CHECK(DyadicPartition::chi(1.0) == 1.0);
  CHECK(DyadicPartition::chi(4.0 / 3.0) == 0.0);
  CHECK(DyadicPartition::phi(1.5) == 1.0);
  CHECK(DyadicPartition::phi(0.9) == 0.0);
  CHECK(DyadicPartition::phi(8.0 / 3.0) == 0.0);
  double sum = 0.0;
  for (int j = -3; j <= 3; ++j) sum += DyadicPartition::phi(std::ldexp(1.0, -j));
  CHECK(std::abs(sum - 1.0) < 1e-15);
  for (double r : {1.05, 1.2, 2.3, 2.6}) {
    CHECK(DyadicPartition::phi(r) + DyadicPartition::phi(r / 2.0) + DyadicPartition::phi(2.0 * r) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("partition of unity on every lattice shell") {
  for (int n : {8, 16, 32}) {
    const Grid g = make_grid(n);
    const DyadicPartition part = build_partition(g);
    CHECK(part.j_min() == -1);
    CHECK(partition_residual(part, g) < 1e-12);
  }
}

TEST_CASE("blocks outside the resolved range are zero with a warning") {
  const Grid g = make_grid(16);
  drain_warnings();
  const SpectralField b = block(cos3x1(g), 20);
  CHECK(b.is_zero());
  CHECK(warning_count() == 1);
  drain_warnings();
}

TEST_CASE("Besov and hybrid norms of cos(3 x1)") {
  const SpectralField f = cos3x1(make_grid(32));
  CHECK(std::abs(besov_norm(f, 0.5, 2.0, 2.0) - 1.0) < 1e-3);
  CHECK(std::abs(besov_norm(f, 0.5, 2.0, kInfinity) - 1.0) < 1e-3);
  CHECK(std::abs(hybrid_norm(f, 0.5, -0.25, 4.0, 1.0) - 0.65804) < 1e-3);
  /// With omega above the block the same field is measured on the L^2 side.
  const HybridParts hp = hybrid_parts(f, 0.5, -0.25, 4.0, 2.0);
  CHECK(hp.high == 0.0);
  CHECK(std::abs(hp.low - 1.0) < 1e-3);
}

TEST_CASE("hybrid threshold assigns block j to the low side iff 2^j <= omega") {
  const Grid g = make_grid(32);
  const SpectralField u = random_solenoidal(2, -11.0 / 6.0, 0, 3, g);
  const BlockNorms bn = block_norms(u, 4.0);
  for (double omega : {0.5, 1.0, 2.0, 3.0, 4.0, 16.0}) {
    double low = 0.0, high = 0.0;
    for (int j = bn.j_min; j <= bn.j_max(); ++j) {
      if (std::ldexp(1.0, j) <= omega) {
        low = std::max(low, std::pow(2.0, 0.5 * j) * bn.l2_at(j));
      } else {
        high = std::max(high, std::pow(2.0, -0.25 * j) * bn.lp_at(j));
      }
    }
    const HybridParts hp = hybrid_parts(u, 0.5, -0.25, 4.0, omega);
    CHECK(hp.low == doctest::Approx(low).epsilon(1e-12));
    CHECK(hp.high == doctest::Approx(high).epsilon(1e-12));
  }
}

TEST_CASE("Bernstein ratio of single modes") {
  const Grid g = make_grid(16);
  const SpectralField f = oracle::mode_pair(g, IVec3{0, 0, 3}, CVec3{Complex(0.5, 0.0), Complex{}, Complex{}}, 1);
  CHECK(bernstein_ratio(f, 1, 2.0, 2.0, IVec3{0, 0, 1}) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(bernstein_ratio(f, 1, 2.0, 2.0, IVec3{0, 0, 0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(bernstein_ratio(f, 3, 2.0, 2.0, IVec3{0, 0, 0}));
}

TEST_CASE("Bony decomposition") {
  const Grid g = make_grid(32);
  SUBCASE("low times high lands in the paraproduct T_f g") {
    const SpectralField f = oracle::mode_pair(g, IVec3{1, 0, 0}, CVec3{Complex(0.5, 0.0), Complex{}, Complex{}}, 1);
    const SpectralField h = oracle::mode_pair(g, IVec3{0, 0, 8}, CVec3{Complex(0.5, 0.0), Complex{}, Complex{}}, 1);
    const BonyParts parts = bony_parts(f, h);
    const double prod = coefficient_norm(dealiased_product(f, h));
    CHECK(coefficient_norm(parts.paraproduct_gf) + coefficient_norm(parts.remainder) < 1e-10 * prod);
    CHECK(coefficient_distance(parts.paraproduct_fg, dealiased_product(f, h)) < 1e-12 * prod);
  }
  SUBCASE("reconstruction on random fields and the zero case") {
    const SpectralField f = random_scalar(1, 0.0, 0, 2, g);
    const SpectralField h = random_scalar(2, 0.0, 0, 2, g);
    const BonyParts parts = bony_parts(f, h);
    const SpectralField sum = parts.paraproduct_fg + parts.paraproduct_gf + parts.remainder;
    const SpectralField prod = dealiased_product(f, h);
    CHECK(coefficient_distance(sum, prod) < 1e-10 * coefficient_norm(prod));
    const BonyParts zero = bony_parts(SpectralField(g, 1), h);
    CHECK(zero.paraproduct_fg.is_zero());
    CHECK(zero.paraproduct_gf.is_zero());
    CHECK(zero.remainder.is_zero());
  }
}

TEST_CASE("tilde norm of an exponentially decaying series") {
  const Grid g = make_grid(16);
  const SpectralField u0 = cos3x1(g);
  const TimeGrid tg{1.0, 64};
  FieldSeries s;
  for (int i = 0; i <= tg.M; ++i) s.push_back(tg.node(i), std::exp(-tg.node(i)) * u0);
  const double hyb = hybrid_norm(u0, 0.5, -0.25, 4.0, 1.0);
  CHECK(std::abs(tilde_norm(s, 1.0, 0.5, -0.25, 4.0, 1.0) - (1.0 - std::exp(-1.0)) * hyb) < 1e-3);
  CHECK(tilde_norm(s, kInfinity, 0.5, -0.25, 4.0, 1.0) == doctest::Approx(hyb).epsilon(1e-14));
}

TEST_CASE("block almost-orthogonality and Besov-Sobolev equivalence on random fields") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    double ratio16 = 0.0;
    for (int n : {16, 32, 64}) {
      const SpectralField u = random_solenoidal(seed, -11.0 / 6.0, 0, 1, make_grid(n));
      const BlockNorms bn = block_norms(u, 2.0);
      double sum = 0.0;
      for (double b : bn.l2) sum += b * b;
      const double l2 = lp_norm(u, 2.0);
      CHECK(sum / (l2 * l2) >= 0.5);
      CHECK(sum / (l2 * l2) <= 2.0);
      const double ratio = besov_norm(u, 0.5, 2.0, 2.0) / sobolev_norm(u, 0.5);
      CHECK(ratio >= 0.5);
      CHECK(ratio <= 2.0);
      if (n == 16) ratio16 = ratio;
      CHECK(ratio == doctest::Approx(ratio16).epsilon(0.1));
    }
  }
}
