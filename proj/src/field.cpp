#include "rotns/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotns {

SpectralField::SpectralField(const Grid& grid, int components, double time)
    : grid_(grid), components_(components), time_(time) {
  if (components < 1 || components > 3) {
    throw std::invalid_argument("SpectralField supports 1 to 3 components");
  }
  coeffs_.assign(grid_.size() * components_, Complex{});
}

bool SpectralField::mean_free() const noexcept {
  for (int c = 0; c < components_; ++c) {
    if (at(c, std::size_t{0}) != Complex{}) return false;
  }
  return true;
}

bool SpectralField::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Complex& z) { return z == Complex{}; });
}

void SpectralField::check_compatible(const SpectralField& other) const {
  if (!(grid_ == other.grid_) || components_ != other.components_) {
    throw std::invalid_argument("mismatched grids or component counts");
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double a) noexcept {
  for (auto& z : coeffs_) z *= a;
  return *this;
}

SpectralField& SpectralField::axpy(double a, const SpectralField& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * other.coeffs_[i];
  return *this;
}

bool SpectralField::operator==(const SpectralField& other) const {
  return grid_ == other.grid_ && components_ == other.components_ &&
         coeffs_ == other.coeffs_;
}

PhysicalField::PhysicalField(const Grid& grid, int components)
    : grid_(grid), components_(components) {
  if (components < 1 || components > 3) {
    throw std::invalid_argument("PhysicalField supports 1 to 3 components");
  }
  values_.assign(grid_.size() * components_, 0.0);
}

Vec3 PhysicalField::point(std::size_t idx) const noexcept {
  const auto n = static_cast<std::size_t>(grid_.n());
  const double h = grid_.length() / grid_.n();
  return {h * static_cast<double>(idx / (n * n)), h * static_cast<double>((idx / n) % n),
          h * static_cast<double>(idx % n)};
}

}  // namespace rotns
