#include "rotns/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rotns/diagnostics.hpp"
#include "rotns/spectral.hpp"

namespace rotns {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_uniform(std::uint64_t bits) {
  // (0, 1]
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

/// Standard normal pair from the counter (seed, k, component).
std::pair<double, double> gaussian_pair(std::uint64_t seed, const IVec3& k, int component) {
  std::uint64_t h = splitmix64(seed);
  for (int a : k) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(a)));
  h = splitmix64(h ^ static_cast<std::uint64_t>(component));
  const double u1 = unit_uniform(h);
  const double u2 = unit_uniform(splitmix64(h));
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

bool canonical(const IVec3& k) {
  if (k[0] != 0) return k[0] > 0;
  if (k[1] != 0) return k[1] > 0;
  return k[2] > 0;
}

/// Envelope coefficient evaluated at an arbitrary physical wavevector.
Complex envelope_coefficient(const EnvelopeSpec& env, const Grid& grid, const Vec3& q) {
  const double w = env.width;
  const double L = grid.length();
  const double pref = env.amplitude * std::pow(w * std::sqrt(2.0 * std::numbers::pi) / L, 3);
  const double q2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2];
  const double phase = -(q[0] * env.center[0] + q[1] * env.center[1] + q[2] * env.center[2]);
  return std::polar(pref * std::exp(-0.5 * w * w * q2), phase);
}

void check_oscillation(int m, const Grid& grid, double omega) {
  if (m < 1) throw std::invalid_argument("oscillation index m must be positive");
  if (4 * m > grid.n()) {
    throw std::invalid_argument("m too large for grid: need m <= n/4 (m = " + std::to_string(m) +
                                ", n = " + std::to_string(grid.n()) + ")");
  }
  if (m * grid.dk() < omega) {
    warn("oscillation frequency below the rotation speed (epsilon > 1/omega)");
  }
}

SpectralField random_field(std::uint64_t seed, double slope, int j_lo, int j_hi,
                           const Grid& grid, int components) {
  if (j_lo > j_hi) throw std::invalid_argument("empty band: j_lo > j_hi");
  const double k_lo = std::ldexp(1.0, j_lo);
  const double k_hi = std::ldexp(1.0, j_hi + 1);
  SpectralField out(grid, components);
  bool any = false;
  for_each_mode(grid, [&](std::size_t idx, const IVec3& ki) {
    if (!canonical(ki) || grid.nyquist(ki) || !grid.dealiased(ki)) return;
    const Vec3 k = grid.physical(ki);
    const double kn = norm(k);
    if (kn < k_lo || kn >= k_hi) return;
    any = true;
    const double shape = std::pow(kn, slope) / std::sqrt(2.0);
    Complex a[3];
    for (int c = 0; c < components; ++c) {
      const auto [re, im] = gaussian_pair(seed, ki, c);
      a[c] = shape * Complex(re, im);
    }
    if (components == 3) {
      const Complex kdota = (k[0] * a[0] + k[1] * a[1] + k[2] * a[2]) / (kn * kn);
      for (int c = 0; c < 3; ++c) a[c] -= k[c] * kdota;
    }
    const std::size_t neg = grid.negated(idx);
    for (int c = 0; c < components; ++c) {
      out.at(c, idx) = a[c];
      out.at(c, neg) = std::conj(a[c]);
    }
  });
  if (!any) throw std::invalid_argument("empty band: no resolved modes in the requested band");
  return out;
}

}  // namespace

void EnvelopeSpec::validate(const Grid& grid) const {
  if (!(width > 0.0) || width > grid.length() / 4.0) {
    throw std::invalid_argument("envelope width must lie in (0, L/4]");
  }
}

EnvelopeSpec default_envelope(const Grid& grid, double amplitude) {
  const double c = grid.length() / 2.0;
  return EnvelopeSpec{grid.length() / 4.0, {c, c, c}, amplitude};
}

SpectralField gaussian_envelope(const EnvelopeSpec& env, const Grid& grid) {
  env.validate(grid);
  SpectralField out(grid, 1);
  for_each_mode(grid, [&](std::size_t idx, const IVec3& ki) {
    if (grid.nyquist(ki)) return;
    out.at(0, idx) = envelope_coefficient(env, grid, grid.physical(ki));
  });
  enforce_hermitian(out);
  return out;
}

SpectralField oscillating_vortex(int m, const EnvelopeSpec& env, const Grid& grid,
                                 double omega) {
  check_oscillation(m, grid, omega);
  env.validate(grid);
  const double shift = m * grid.dk();
  SpectralField out(grid, 3);
  // sin(a x3) g  <->  (g(k - a e3) - g(k + a e3)) / (2i), with
  // g(q) = (-i q2, i q1, 0) phi(q).
  for_each_mode(grid, [&](std::size_t idx, const IVec3& ki) {
    if (grid.nyquist(ki) || ki == IVec3{0, 0, 0}) return;
    const Vec3 k = grid.physical(ki);
    const Vec3 qm{k[0], k[1], k[2] - shift};
    const Vec3 qp{k[0], k[1], k[2] + shift};
    const Complex pm = envelope_coefficient(env, grid, qm);
    const Complex pp = envelope_coefficient(env, grid, qp);
    const Complex half_over_i(0.0, -0.5);
    // Transverse wavevector components are unchanged by the x3 shift.
    out.at(0, idx) = half_over_i * Complex(0.0, -k[1]) * (pm - pp);
    out.at(1, idx) = half_over_i * Complex(0.0, k[0]) * (pm - pp);
  });
  enforce_hermitian(out);
  return out;
}

SpectralField modulated_scalar(int m, const EnvelopeSpec& env, const Grid& grid,
                               double omega) {
  check_oscillation(m, grid, omega);
  env.validate(grid);
  const double shift = m * grid.dk();
  SpectralField out(grid, 2);
  for_each_mode(grid, [&](std::size_t idx, const IVec3& ki) {
    if (grid.nyquist(ki) || ki == IVec3{0, 0, 0}) return;
    const Vec3 k = grid.physical(ki);
    const Complex pm = envelope_coefficient(env, grid, {k[0] - shift, k[1], k[2]});
    const Complex pp = envelope_coefficient(env, grid, {k[0] + shift, k[1], k[2]});
    out.at(0, idx) = 0.5 * (pm + pp);
    out.at(1, idx) = Complex(0.0, -0.5) * (pm - pp);
  });
  enforce_hermitian(out);
  return out;
}

SpectralField random_solenoidal(std::uint64_t seed, double slope, int j_lo, int j_hi,
                                const Grid& grid) {
  return random_field(seed, slope, j_lo, j_hi, grid, 3);
}

SpectralField random_scalar(std::uint64_t seed, double slope, int j_lo, int j_hi,
                            const Grid& grid) {
  return random_field(seed, slope, j_lo, j_hi, grid, 1);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

}  // namespace rotns
