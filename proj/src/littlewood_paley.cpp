#include "rotns/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "fft.hpp"
#include "rotns/diagnostics.hpp"
#include "rotns/initial_data.hpp"

namespace rotns {
namespace {

double bump(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

double smooth_step(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = bump(s);
  return a / (a + bump(1.0 - s));
}

/// The (at most two) blocks whose phi is nonzero at |k| = kmag.
struct BlockHits {
  int j[2];
  double weight[2];
  int count = 0;
};

BlockHits blocks_at(double kmag) {
  BlockHits hits;
  if (kmag <= 0.0) return hits;
  int e = 0;
  std::frexp(kmag, &e);  // kmag = f 2^e with f in [0.5, 1)
  const int top = e - 1;  // kmag / 2^top in [1, 2)
  for (int j : {top, top - 1}) {
    const double w = DyadicPartition::phi(std::ldexp(kmag, -j));
    if (w != 0.0) {
      hits.j[hits.count] = j;
      hits.weight[hits.count] = w;
      ++hits.count;
    }
  }
  return hits;
}

double time_norm(const std::vector<double>& values, const std::vector<double>& times, double r) {
  if (std::isinf(r)) return *std::max_element(values.begin(), values.end());
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double h = times[i + 1] - times[i];
    if (r == 1.0) {
      integral += 0.5 * h * (values[i] + values[i + 1]);
    } else {
      integral += 0.5 * h * (std::pow(values[i], r) + std::pow(values[i + 1], r));
    }
  }
  return r == 1.0 ? integral : std::pow(integral, 1.0 / r);
}

bool low_side(int j, double omega) { return std::ldexp(1.0, j) <= omega; }

/// sum over blocks in [lo, hi] of phi_j(|k|), i.e. the multiplier of
/// Delta~ style partial sums.
double block_sum_weight(double kmag, int lo, int hi) {
  double w = 0.0;
  const BlockHits hits = blocks_at(kmag);
  for (int h = 0; h < hits.count; ++h) {
    if (hits.j[h] >= lo && hits.j[h] <= hi) w += hits.weight[h];
  }
  return w;
}

template <class Weight>
SpectralField apply_radial(const SpectralField& f, Weight&& weight) {
  const Grid& g = f.grid();
  SpectralField out(g, f.components(), f.time());
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    if (ki == IVec3{0, 0, 0}) return;
    const double w = weight(norm(g.physical(ki)));
    if (w == 0.0) return;
    for (int c = 0; c < f.components(); ++c) out.at(c, idx) = w * f.at(c, idx);
  });
  return out;
}

void require_dealiased(const SpectralField& f) {
  if (!is_dealiased(f)) {
    throw std::invalid_argument("fields must be band-limited to the dealiased zone (|k_i| <= n/3)");
  }
}

}  // namespace

DyadicPartition::DyadicPartition(int j_min, int j_max) : j_min_(j_min), j_max_(j_max) {
  if (j_min > j_max) throw std::invalid_argument("DyadicPartition: empty block range");
}

double DyadicPartition::chi(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 4.0 / 3.0) return 0.0;
  return smooth_step((4.0 / 3.0 - r) * 3.0);
}

double DyadicPartition::phi(double r) { return chi(0.5 * r) - chi(r); }

DyadicPartition build_partition(const Grid& grid) {
  const double kmin = grid.dk();
  const double kmax = grid.max_wavenumber();
  const int j_min = static_cast<int>(std::ceil(std::log2(3.0 * kmin / 8.0)));
  const int j_max = static_cast<int>(std::floor(std::log2(kmax)));
  return DyadicPartition(j_min, j_max);
}

double partition_residual(const DyadicPartition& partition, const Grid& grid) {
  // Iterate over distinct shells |k|^2 (in lattice units).
  std::map<long, double> shells;
  const int half = grid.n() / 2;
  for (int a = 0; a <= half; ++a) {
    for (int b = 0; b <= half; ++b) {
      for (int c = 0; c <= half; ++c) {
        const long m2 = static_cast<long>(a) * a + static_cast<long>(b) * b + static_cast<long>(c) * c;
        if (m2 > 0) shells.emplace(m2, std::sqrt(static_cast<double>(m2)) * grid.dk());
      }
    }
  }
  double worst = 0.0;
  for (const auto& [m2, kmag] : shells) {
    double sum = 0.0;
    for (int j = partition.j_min(); j <= partition.j_max(); ++j) sum += partition.block_weight(j, kmag);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

SpectralField block(const SpectralField& f, int j, BlockMode mode) {
  const DyadicPartition part = build_partition(f.grid());
  if (j < part.j_min() - 1 || j > part.j_max() + 1) {
    warn("block: index " + std::to_string(j) + " outside the resolved range");
    return SpectralField(f.grid(), f.components(), f.time());
  }
  if (mode == BlockMode::block) {
    return apply_radial(f, [&](double k) { return part.block_weight(j, k); });
  }
  return apply_radial(f, [&](double k) { return part.lowpass_weight(j, k); });
}

BlockNorms block_norms(const SpectralField& f, double p, double lp_threshold) {
  if (!(p >= 1.0)) throw std::invalid_argument("block_norms requires p >= 1");
  const Grid& g = f.grid();
  const DyadicPartition part = build_partition(g);
  const int nb = part.count();
  BlockNorms out;
  out.j_min = part.j_min();
  out.p = p;
  out.l2.assign(nb, 0.0);
  out.lp.assign(nb, std::numeric_limits<double>::quiet_NaN());

  // Per-mode block membership, reused for the L^p pass.
  std::vector<BlockHits> hits(g.size());
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    if (ki == IVec3{0, 0, 0}) return;
    hits[idx] = blocks_at(norm(g.physical(ki)));
    double a2 = 0.0;
    for (int c = 0; c < f.components(); ++c) a2 += std::norm(f.at(c, idx));
    if (a2 == 0.0) return;
    for (int h = 0; h < hits[idx].count; ++h) {
      const double w = hits[idx].weight[h];
      out.l2[hits[idx].j[h] - out.j_min] += w * w * a2;
    }
  });
  for (double& v : out.l2) v = std::sqrt(v);

  std::vector<Complex> buf(g.size());
  std::vector<double> mag2(g.size());
  for (int b = 0; b < nb; ++b) {
    const int j = out.j_min + b;
    if (!(std::ldexp(1.0, j) > lp_threshold)) continue;
    if (p == 2.0 || out.l2[b] == 0.0) {
      out.lp[b] = out.l2[b];
      continue;
    }
    std::fill(mag2.begin(), mag2.end(), 0.0);
    for (int c = 0; c < f.components(); ++c) {
      auto comp = f.component(c);
      for (std::size_t idx = 0; idx < buf.size(); ++idx) {
        Complex v{};
        for (int h = 0; h < hits[idx].count; ++h) {
          if (hits[idx].j[h] == j) v = hits[idx].weight[h] * comp[idx];
        }
        buf[idx] = v;
      }
      detail::fft_backward(g.n(), buf.data());
      for (std::size_t x = 0; x < buf.size(); ++x) mag2[x] += buf[x].real() * buf[x].real();
    }
    if (std::isinf(p)) {
      out.lp[b] = std::sqrt(*std::max_element(mag2.begin(), mag2.end()));
    } else {
      double sum = 0.0;
      for (double m : mag2) sum += std::pow(m, 0.5 * p);
      out.lp[b] = std::pow(sum / static_cast<double>(g.size()), 1.0 / p);
    }
  }
  return out;
}

double besov_norm(const SpectralField& f, double s, double p, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("besov_norm requires q >= 1");
  if (!f.mean_free()) warn("besov_norm: field has a nonzero mean (ignored)");
  const BlockNorms norms = block_norms(f, p);
  double acc = 0.0;
  for (int j = norms.j_min; j <= norms.j_max(); ++j) {
    const double term = std::pow(2.0, j * s) * norms.lp_at(j);
    if (std::isinf(q)) {
      acc = std::max(acc, term);
    } else {
      acc += std::pow(term, q);
    }
  }
  return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

HybridParts hybrid_parts(const BlockNorms& norms, double s, double sigma, double omega) {
  HybridParts parts;
  for (int j = norms.j_min; j <= norms.j_max(); ++j) {
    if (low_side(j, omega)) {
      parts.low = std::max(parts.low, std::pow(2.0, j * s) * norms.l2_at(j));
    } else {
      parts.high = std::max(parts.high, std::pow(2.0, j * sigma) * norms.lp_at(j));
    }
  }
  return parts;
}

HybridParts hybrid_parts(const SpectralField& f, double s, double sigma, double p, double omega) {
  if (!(omega >= 0.0)) throw std::invalid_argument("hybrid norm requires omega >= 0");
  if (!f.mean_free()) warn("hybrid_norm: field has a nonzero mean (ignored)");
  return hybrid_parts(block_norms(f, p, omega), s, sigma, omega);
}

double hybrid_norm(const SpectralField& f, double s, double sigma, double p, double omega) {
  return hybrid_parts(f, s, sigma, p, omega).total();
}

std::vector<BlockNorms> series_block_norms(const FieldSeries& u, double p, double omega) {
  if (u.empty()) throw std::invalid_argument("empty series");
  std::vector<BlockNorms> out;
  out.reserve(u.size());
  for (const auto& f : u.fields()) out.push_back(block_norms(f, p, omega));
  return out;
}

double tilde_norm(const std::vector<BlockNorms>& norms, const std::vector<double>& times, double r,
                  double s, double sigma, double omega) {
  if (norms.empty()) throw std::invalid_argument("empty series");
  if (!(r >= 1.0)) throw std::invalid_argument("tilde_norm requires r >= 1");
  const BlockNorms& first = norms.front();
  double low = 0.0;
  double high = 0.0;
  std::vector<double> values(norms.size());
  for (int j = first.j_min; j <= first.j_max(); ++j) {
    const bool low_block = low_side(j, omega);
    for (std::size_t i = 0; i < norms.size(); ++i) {
      values[i] = low_block ? norms[i].l2_at(j) : norms[i].lp_at(j);
    }
    const double tn = time_norm(values, times, r);
    if (low_block) {
      low = std::max(low, std::pow(2.0, j * s) * tn);
    } else {
      high = std::max(high, std::pow(2.0, j * sigma) * tn);
    }
  }
  return low + high;
}

double tilde_norm(const FieldSeries& u, double r, double s, double sigma, double p, double omega) {
  return tilde_norm(series_block_norms(u, p, omega), u.times(), r, s, sigma, omega);
}

double ep_norm(const std::vector<BlockNorms>& norms, const std::vector<double>& times, double p,
               double omega) {
  return tilde_norm(norms, times, kInfinity, 0.5, 3.0 / p - 1.0, omega) +
         tilde_norm(norms, times, 1.0, 2.5, 3.0 / p + 1.0, omega);
}

double ep_norm(const FieldSeries& u, double p, double omega) {
  if (p < 2.0 || p > 4.0) warn("ep_norm: p outside [2, 4]");
  return ep_norm(series_block_norms(u, p, omega), u.times(), p, omega);
}

double tilde_sobolev_norm(const FieldSeries& u, double s) {
  const auto norms = series_block_norms(u, 2.0, kInfinity);
  const BlockNorms& first = norms.front();
  double sum = 0.0;
  for (int j = first.j_min; j <= first.j_max(); ++j) {
    double sup = 0.0;
    for (const auto& n : norms) sup = std::max(sup, n.l2_at(j));
    sum += std::pow(2.0, 2.0 * j * s) * sup * sup;
  }
  return std::sqrt(sum);
}

BonyParts bony_parts(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid() == g.grid()) || f.components() != g.components()) {
    throw std::invalid_argument("bony_parts: mismatched fields");
  }
  require_dealiased(f);
  require_dealiased(g);
  const DyadicPartition part = build_partition(f.grid());
  BonyParts out{SpectralField(f.grid(), f.components()), SpectralField(f.grid(), f.components()),
                SpectralField(f.grid(), f.components())};
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    const SpectralField dfj = apply_radial(f, [&](double k) { return part.block_weight(j, k); });
    const SpectralField dgj = apply_radial(g, [&](double k) { return part.block_weight(j, k); });
    if (!dgj.is_zero()) {
      const SpectralField sf = apply_radial(f, [&](double k) { return part.lowpass_weight(j - 1, k); });
      if (!sf.is_zero()) out.paraproduct_fg += dealiased_product(sf, dgj);
    }
    if (!dfj.is_zero()) {
      const SpectralField sg = apply_radial(g, [&](double k) { return part.lowpass_weight(j - 1, k); });
      if (!sg.is_zero()) out.paraproduct_gf += dealiased_product(sg, dfj);
      const SpectralField tg =
          apply_radial(g, [&](double k) { return block_sum_weight(k, j - 1, j + 1); });
      if (!tg.is_zero()) out.remainder += dealiased_product(dfj, tg);
    }
  }
  return out;
}

double bernstein_ratio(const SpectralField& f, int j, double p, double q, const IVec3& gamma) {
  if (!(p >= 1.0) || !(q >= p)) throw std::invalid_argument("bernstein_ratio requires 1 <= p <= q");
  for (int a : gamma) {
    if (a < 0) throw std::invalid_argument("bernstein_ratio: negative multi-index");
  }
  SpectralField dj = block(f, j);
  if (dj.is_zero()) throw std::invalid_argument("bernstein_ratio: zero block");
  SpectralField deriv = dj;
  for (int axis = 0; axis < 3; ++axis) {
    for (int r = 0; r < gamma[axis]; ++r) deriv = derivative(deriv, axis + 1);
  }
  const int order = gamma[0] + gamma[1] + gamma[2];
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  const double scale = std::pow(2.0, j * order + 3.0 * j * (1.0 / p - inv_q));
  return lp_norm(deriv, q) / (scale * lp_norm(dj, p));
}

IdentityReport check_identities(const DyadicPartition& partition, const Grid& grid,
                                std::uint64_t seed) {
  IdentityReport report;
  report.partition_residual = partition_residual(partition, grid);

  // Band-limited random fields filling the dealiased zone.
  const int top = static_cast<int>(std::floor(std::log2(std::sqrt(3.0) * (grid.n() / 3) * grid.dk())));
  const int bottom = static_cast<int>(std::floor(std::log2(grid.dk())));
  SpectralField f = random_scalar(derive_seed(seed, 1), -1.0, bottom, top, grid);
  SpectralField g = random_scalar(derive_seed(seed, 2), -1.0, bottom, top, grid);
  f *= 1.0 / coefficient_norm(f);
  g *= 1.0 / coefficient_norm(g);

  const int lo = partition.j_min();
  const int hi = partition.j_max();
  std::vector<SpectralField> fblocks;
  for (int j = lo; j <= hi; ++j) {
    fblocks.push_back(apply_radial(f, [&](double k) { return partition.block_weight(j, k); }));
  }
  for (int j = lo; j <= hi; ++j) {
    for (int k = lo; k <= hi; ++k) {
      const SpectralField djk =
          apply_radial(fblocks[k - lo], [&](double km) { return partition.block_weight(j, km); });
      const double v = coefficient_norm(djk);
      if (std::abs(j - k) >= 2) report.block_orthogonality = std::max(report.block_orthogonality, v);
      if (j == k) report.same_block = std::max(report.same_block, v);
    }
  }
  for (int k = lo; k <= hi; ++k) {
    const SpectralField sf = apply_radial(f, [&](double km) { return partition.lowpass_weight(k - 1, km); });
    const SpectralField dg = apply_radial(g, [&](double km) { return partition.block_weight(k, km); });
    if (sf.is_zero() || dg.is_zero()) continue;
    bool needed = false;
    for (int j = lo; j <= hi; ++j) needed = needed || std::abs(j - k) >= 5;
    if (!needed) continue;
    const SpectralField prod = dealiased_product(sf, dg);
    for (int j = lo; j <= hi; ++j) {
      if (std::abs(j - k) < 5) continue;
      const SpectralField dj =
          apply_radial(prod, [&](double km) { return partition.block_weight(j, km); });
      report.paraproduct_support = std::max(report.paraproduct_support, coefficient_norm(dj));
    }
  }
  const BonyParts parts = bony_parts(f, g);
  const SpectralField fg = dealiased_product(f, g);
  SpectralField sum = parts.paraproduct_fg + parts.paraproduct_gf + parts.remainder;
  report.bony_reconstruction = coefficient_distance(sum, fg) / coefficient_norm(fg);
  return report;
}

}  // namespace rotns
