#include "rotns/grid.hpp"

#include <stdexcept>
#include <string>

namespace rotns {

Grid::Grid(int n, double length) : n_(n), length_(length) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("n not a power of two (n >= 8 required), got " +
                                std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("box length L must be positive");
  }
}

IVec3 Grid::wavevector(std::size_t flat_index) const noexcept {
  const auto n = static_cast<std::size_t>(n_);
  const int i3 = static_cast<int>(flat_index % n);
  const int i2 = static_cast<int>((flat_index / n) % n);
  const int i1 = static_cast<int>(flat_index / (n * n));
  return {wavenumber(i1), wavenumber(i2), wavenumber(i3)};
}

std::size_t Grid::negated(std::size_t flat_index) const noexcept {
  const auto n = static_cast<std::size_t>(n_);
  const std::size_t i3 = flat_index % n;
  const std::size_t i2 = (flat_index / n) % n;
  const std::size_t i1 = flat_index / (n * n);
  auto neg = [n](std::size_t i) { return (n - i) % n; };
  return (neg(i1) * n + neg(i2)) * n + neg(i3);
}

double Grid::max_wavenumber() const noexcept {
  return std::sqrt(3.0) * (n_ / 2) * dk();
}

Grid make_grid(int n, double length) { return Grid(n, length); }

void FlowParams::validate() const {
  if (!(nu > 0.0)) throw std::invalid_argument("params.nu must be positive");
  if (!(omega >= 0.0)) throw std::invalid_argument("params.omega must be non-negative");
  if (!(smallness_c > 0.0)) {
    throw std::invalid_argument("params.smallness_c must be positive");
  }
}

}  // namespace rotns
