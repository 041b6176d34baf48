#pragma once

#include <span>
#include <vector>

#include "rotns/grid.hpp"

namespace rotns {

/// Fourier coefficients of a real periodic field with 1, 2 or 3 components.
///
/// coeff(k) is the coefficient of e^{ik.x} under the normalized measure,
/// i.e. the forward transform carries a 1/n^3 factor. Vector fields use three
/// components; scalars use one; a complex-valued scalar is stored as its
/// (real, imaginary) pair of real fields.
class SpectralField {
 public:
  explicit SpectralField(const Grid& grid, int components = 3, double time = 0.0);

  const Grid& grid() const noexcept { return grid_; }
  int components() const noexcept { return components_; }
  double time() const noexcept { return time_; }
  void set_time(double t) noexcept { time_ = t; }

  std::span<Complex> component(int c) noexcept {
    return {coeffs_.data() + c * grid_.size(), grid_.size()};
  }
  std::span<const Complex> component(int c) const noexcept {
    return {coeffs_.data() + c * grid_.size(), grid_.size()};
  }
  Complex& at(int c, std::size_t idx) noexcept { return coeffs_[c * grid_.size() + idx]; }
  const Complex& at(int c, std::size_t idx) const noexcept {
    return coeffs_[c * grid_.size() + idx];
  }
  Complex& at(int c, const IVec3& k) noexcept { return at(c, grid_.flat(k)); }
  const Complex& at(int c, const IVec3& k) const noexcept { return at(c, grid_.flat(k)); }

  std::span<Complex> data() noexcept { return coeffs_; }
  std::span<const Complex> data() const noexcept { return coeffs_; }

  /// coeff(0) == 0 in every component.
  bool mean_free() const noexcept;
  bool is_zero() const noexcept;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double a) noexcept;
  /// this += a * other
  SpectralField& axpy(double a, const SpectralField& other);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double a, SpectralField f) { return f *= a; }

  /// Bitwise coefficient equality (grid and component count included).
  bool operator==(const SpectralField& other) const;

 private:
  void check_compatible(const SpectralField& other) const;

  Grid grid_;
  int components_;
  double time_;
  std::vector<Complex> coeffs_;
};

/// Real samples on the collocation lattice x = L * (i1, i2, i3) / n.
class PhysicalField {
 public:
  explicit PhysicalField(const Grid& grid, int components = 3);

  const Grid& grid() const noexcept { return grid_; }
  int components() const noexcept { return components_; }

  std::span<double> component(int c) noexcept {
    return {values_.data() + c * grid_.size(), grid_.size()};
  }
  std::span<const double> component(int c) const noexcept {
    return {values_.data() + c * grid_.size(), grid_.size()};
  }
  double& at(int c, std::size_t idx) noexcept { return values_[c * grid_.size() + idx]; }
  double at(int c, std::size_t idx) const noexcept { return values_[c * grid_.size() + idx]; }

  /// Coordinates of collocation point `idx`.
  Vec3 point(std::size_t idx) const noexcept;

  /// Fills component c with f(x).
  template <class Fn>
  void fill(int c, Fn&& f) {
    auto comp = component(c);
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = f(point(i));
  }

 private:
  Grid grid_;
  int components_;
  std::vector<double> values_;
};

}  // namespace rotns
