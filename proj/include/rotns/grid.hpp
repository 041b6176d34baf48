#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <complex>
#include <cstddef>
#include <numbers>

namespace rotns {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<Complex, 3>;
using IVec3 = std::array<int, 3>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Periodic collocation grid on the box [0, L)^3 with n points per axis.
///
/// Spectral arrays are stored in FFT order on every axis: index i holds the
/// integer wavenumber i for i <= n/2 and i - n above, so the resolved lattice
/// is {-n/2+1, ..., n/2}^3 scaled by 2*pi/L. Index n/2 is the unmatched
/// Nyquist plane; every field keeps it at zero amplitude. The k3 axis is the
/// fastest-varying one in flat storage.
class Grid {
 public:
  Grid(int n, double length);

  int n() const noexcept { return n_; }
  double length() const noexcept { return length_; }
  /// Lattice spacing in wavenumber space, 2*pi/L.
  double dk() const noexcept { return kTwoPi / length_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(n_) * n_ * n_;
  }

  int wavenumber(int index) const noexcept {
    return index <= n_ / 2 ? index : index - n_;
  }
  int index_of(int wavenumber) const noexcept {
    return ((wavenumber % n_) + n_) % n_;
  }
  std::size_t flat(int i1, int i2, int i3) const noexcept {
    return (static_cast<std::size_t>(i1) * n_ + i2) * n_ + i3;
  }
  std::size_t flat(const IVec3& k) const noexcept {
    return flat(index_of(k[0]), index_of(k[1]), index_of(k[2]));
  }
  IVec3 wavevector(std::size_t flat_index) const noexcept;
  Vec3 physical(const IVec3& k) const noexcept {
    return {k[0] * dk(), k[1] * dk(), k[2] * dk()};
  }
  /// Flat index of -k for the wavevector stored at `flat_index`.
  std::size_t negated(std::size_t flat_index) const noexcept;

  bool nyquist(const IVec3& k) const noexcept {
    return k[0] == n_ / 2 || k[1] == n_ / 2 || k[2] == n_ / 2;
  }
  /// 2/3 rule: a mode survives dealiasing iff every |k_i| <= n/3.
  bool dealiased(const IVec3& k) const noexcept {
    return 3 * std::abs(k[0]) <= n_ && 3 * std::abs(k[1]) <= n_ &&
           3 * std::abs(k[2]) <= n_;
  }
  /// Largest |k| on the lattice (physical units).
  double max_wavenumber() const noexcept;

  bool operator==(const Grid&) const = default;

 private:
  int n_;
  double length_;
};

Grid make_grid(int n, double length = kTwoPi);

/// Physical constants of the rotating flow.
struct FlowParams {
  double nu = 1.0;     ///< viscosity
  double omega = 1.0;  ///< rotation speed
  double smallness_c = 0.05;

  void validate() const;
};

/// Visits every lattice mode as fn(flat_index, integer_wavevector).
template <class Fn>
void for_each_mode(const Grid& grid, Fn&& fn) {
  const int n = grid.n();
  std::size_t idx = 0;
  for (int i1 = 0; i1 < n; ++i1) {
    const int k1 = grid.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      const int k2 = grid.wavenumber(i2);
      for (int i3 = 0; i3 < n; ++i3, ++idx) {
        fn(idx, IVec3{k1, k2, grid.wavenumber(i3)});
      }
    }
  }
}

inline double norm(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline double norm(const CVec3& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

}  // namespace rotns
