#include <cmath>

#include "doctest.h"
#include "rotns/diagnostics.hpp"
#include "rotns/initial_data.hpp"
#include "rotns/littlewood_paley.hpp"

using namespace rotns;

TEST_CASE("random solenoidal fields are reproducible, real and divergence-free") {
  const Grid g = make_grid(16);
  const SpectralField a = random_solenoidal(42, -11.0 / 6.0, 0, 2, g);
  CHECK(a == random_solenoidal(42, -11.0 / 6.0, 0, 2, g));
  CHECK_FALSE(a == random_solenoidal(43, -11.0 / 6.0, 0, 2, g));
  CHECK(is_solenoidal(a));
  CHECK(a.mean_free());
  CHECK(hermitian_defect(a) < 1e-15);
  CHECK(is_dealiased(a));

  /// Keying by wavevector makes the field independent of the grid.
  const SpectralField b = random_solenoidal(42, -11.0 / 6.0, 0, 1, make_grid(32));
  const SpectralField c = random_solenoidal(42, -11.0 / 6.0, 0, 1, g);
  CHECK(sobolev_norm(b, 0.5) == doctest::Approx(sobolev_norm(c, 0.5)).epsilon(1e-14));
}

TEST_CASE("slope -11/6 spreads H^1/2 mass nearly evenly across blocks") {
  /// Shell counts grow like 4^j and squared amplitudes like 2^{-11j/3}, so
  /// the weighted block norms grow only like 2^{j/6}.
  const Grid g = make_grid(64);
  double lo = kInfinity, hi = 0.0;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const SpectralField u = random_solenoidal(seed, -11.0 / 6.0, 0, 3, g);
    const BlockNorms bn = block_norms(u, 2.0);
    double mean = 0.0;
    std::vector<double> w;
    for (int j = 1; j <= 3; ++j) {
      w.push_back(std::pow(2.0, 0.5 * j) * bn.l2_at(j));
      mean += w.back() / 3.0;
    }
    for (double x : w) {
      lo = std::min(lo, x / mean);
      hi = std::max(hi, x / mean);
    }
  }
  CHECK(lo >= 0.5);
  CHECK(hi <= 1.5);
}

TEST_CASE("envelope validation and vortex structure") {
  const Grid g = make_grid(32);
  EnvelopeSpec env = default_envelope(g);
  CHECK(env.width == doctest::Approx(g.length() / 4.0));
  env.width = g.length();
  CHECK_THROWS(env.validate(g));

  drain_warnings();
  const SpectralField v = oscillating_vortex(4, default_envelope(g), g, 1.0);
  CHECK(is_solenoidal(v));
  CHECK(v.mean_free());
  CHECK(hermitian_defect(v) < 1e-14);
  CHECK_THROWS(oscillating_vortex(16, default_envelope(g), g));
  drain_warnings();
}

TEST_CASE("hybrid norm of the oscillating vortex scales like epsilon^{1/4} at p = 4") {
  const Grid g = make_grid(64);
  const EnvelopeSpec env = default_envelope(g);
  const double h8 = hybrid_norm(oscillating_vortex(8, env, g, 1.0), 0.5, -0.25, 4.0, 1.0);
  const double h16 = hybrid_norm(oscillating_vortex(16, env, g, 1.0), 0.5, -0.25, 4.0, 1.0);
  CHECK(h16 / h8 == doctest::Approx(std::pow(2.0, -0.25)).epsilon(0.15));
  CHECK(sobolev_norm(oscillating_vortex(16, env, g, 1.0), 0.5) > sobolev_norm(oscillating_vortex(8, env, g, 1.0), 0.5));
}

TEST_CASE("modulated scalar has no mean and is concentrated near |k| = m") {
  const Grid g = make_grid(64);
  const SpectralField f = modulated_scalar(16, default_envelope(g), g, 1.0);
  CHECK(f.components() == 2);
  CHECK(f.mean_free());
  const HybridParts hp = hybrid_parts(f, 0.5, -0.25, 4.0, 1.0);
  CHECK(hp.low < 1e-6 * hp.high);
}

TEST_CASE("seed derivation separates streams") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}
