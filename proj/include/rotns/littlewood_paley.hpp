#pragma once

#include <cstdint>
#include <vector>

#include "rotns/series.hpp"
#include "rotns/spectral.hpp"

namespace rotns {

/// Smooth dyadic partition of unity on the frequency lattice of one grid.
///
/// chi(r) = 1 for r <= 1, 0 for r >= 4/3, and a smooth bump quotient in
/// between; phi(r) = chi(r/2) - chi(r) is supported in [1, 8/3] and equals 1
/// exactly on [4/3, 2]. Block j uses phi(2^{-j}|k|); the low-pass S_j uses
/// chi(2^{-j}|k|).
class DyadicPartition {
 public:
  DyadicPartition(int j_min, int j_max);

  static double chi(double r);
  static double phi(double r);

  int j_min() const noexcept { return j_min_; }
  int j_max() const noexcept { return j_max_; }
  int count() const noexcept { return j_max_ - j_min_ + 1; }

  double block_weight(int j, double kmag) const { return phi(std::ldexp(kmag, -j)); }
  double lowpass_weight(int j, double kmag) const { return chi(std::ldexp(kmag, -j)); }

 private:
  int j_min_;
  int j_max_;
};

/// Resolved block range: j_min is the lowest block touching the smallest
/// nonzero |k| = 2*pi/L, j_max the highest touching the largest |k|.
DyadicPartition build_partition(const Grid& grid);

/// max over nonzero lattice shells of |sum_{j_min..j_max} phi(2^{-j}|k|) - 1|.
double partition_residual(const DyadicPartition& partition, const Grid& grid);

enum class BlockMode { block, lowpass };

/// Delta_j f (block) or S_j f (lowpass). Outside [j_min - 1, j_max + 1] the
/// result is a zero field and a warning is recorded.
SpectralField block(const SpectralField& f, int j, BlockMode mode = BlockMode::block);

/// ||Delta_j f||_{L^2} and ||Delta_j f||_{L^p} for every resolved block.
struct BlockNorms {
  int j_min = 0;
  double p = 2.0;
  std::vector<double> l2;
  /// NaN for blocks where the L^p norm was not requested.
  std::vector<double> lp;

  int j_max() const noexcept { return j_min + static_cast<int>(l2.size()) - 1; }
  double l2_at(int j) const { return l2[j - j_min]; }
  double lp_at(int j) const { return lp[j - j_min]; }
};

/// Block norms of f. The L^p norm is evaluated only for blocks with
/// 2^j > lp_threshold (all blocks by default).
BlockNorms block_norms(const SpectralField& f, double p, double lp_threshold = -kInfinity);

/// ||2^{js} ||Delta_j f||_{L^p}||_{l^q} over the resolved blocks.
double besov_norm(const SpectralField& f, double s, double p, double q);

struct HybridParts {
  double low = 0.0;   ///< sup over 2^j <= omega of 2^{js} ||Delta_j f||_2
  double high = 0.0;  ///< sup over 2^j > omega of 2^{j sigma} ||Delta_j f||_p
  double total() const noexcept { return low + high; }
};

HybridParts hybrid_parts(const SpectralField& f, double s, double sigma, double p, double omega);
double hybrid_norm(const SpectralField& f, double s, double sigma, double p, double omega);

/// Hybrid combination of precomputed block norms.
HybridParts hybrid_parts(const BlockNorms& norms, double s, double sigma, double omega);

/// Per-node block norms of a series (L^p only where 2^j > omega).
std::vector<BlockNorms> series_block_norms(const FieldSeries& u, double p, double omega);

/// Time-space norm: per-block L^r_T norm (trapezoidal quadrature on the
/// series nodes, max for r = inf) followed by the hybrid sup structure.
double tilde_norm(const FieldSeries& u, double r, double s, double sigma, double p,
                  double omega);
double tilde_norm(const std::vector<BlockNorms>& norms, const std::vector<double>& times,
                  double r, double s, double sigma, double omega);

/// L~^inf(hybrid(1/2, 3/p-1)) + L~^1(hybrid(5/2, 3/p+1)).
double ep_norm(const FieldSeries& u, double p, double omega);
double ep_norm(const std::vector<BlockNorms>& norms, const std::vector<double>& times, double p,
               double omega);

/// (sum_j 2^{2js} sup_t ||Delta_j u(t)||_2^2)^{1/2}.
double tilde_sobolev_norm(const FieldSeries& u, double s);

/// Bony decomposition of the dealiased product f g.
struct BonyParts {
  SpectralField paraproduct_fg;  ///< T_f g = sum_j S_{j-1} f Delta_j g
  SpectralField paraproduct_gf;  ///< T_g f
  SpectralField remainder;       ///< R(f, g) = sum_j Delta_j f Delta~_j g
};

BonyParts bony_parts(const SpectralField& f, const SpectralField& g);

/// ||d^gamma Delta_j f||_q / (2^{j|gamma| + 3j(1/p - 1/q)} ||Delta_j f||_p).
double bernstein_ratio(const SpectralField& f, int j, double p, double q, const IVec3& gamma);

struct IdentityReport {
  double partition_residual = 0.0;
  /// max ||Delta_j Delta_k f||_2 over |j - k| >= 2
  double block_orthogonality = 0.0;
  /// max ||Delta_j(S_{k-1} f Delta_k g)||_2 over |j - k| >= 5
  double paraproduct_support = 0.0;
  /// max ||Delta_j Delta_j f||_2, reported only
  double same_block = 0.0;
  /// ||T_f g + T_g f + R(f, g) - f g||_2 / ||f g||_2
  double bony_reconstruction = 0.0;
};

/// Checks the support identities on random band-limited unit-norm fields.
IdentityReport check_identities(const DyadicPartition& partition, const Grid& grid,
                                std::uint64_t seed = 1);

}  // namespace rotns
