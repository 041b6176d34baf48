#include "rotns/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fft.hpp"
#include "rotns/diagnostics.hpp"

namespace rotns {
namespace {

using Buffer = std::vector<Complex>;

void check_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in field");
  }
}

void check_finite(std::span<const Complex> values) {
  for (const auto& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("non-finite value in field");
    }
  }
}

/// Inverse transform of one component, optionally restricted to the 2/3 zone.
/// Only the real part of the result is meaningful.
void component_to_physical(const SpectralField& f, int c, bool dealiased_only, Buffer& buf) {
  const Grid& g = f.grid();
  auto coeffs = f.component(c);
  buf.assign(coeffs.begin(), coeffs.end());
  if (dealiased_only) {
    for_each_mode(g, [&](std::size_t idx, const IVec3& k) {
      if (!g.dealiased(k)) buf[idx] = Complex{};
    });
  }
  detail::fft_backward(g.n(), buf.data());
}

void check_solenoidal(const SpectralField& u) {
  if (u.components() != 3) throw std::invalid_argument("expected a vector field");
  if (!is_solenoidal(u)) throw std::invalid_argument("input not solenoidal");
}

}  // namespace

SpectralField to_spectral(const PhysicalField& f) {
  const Grid& g = f.grid();
  SpectralField out(g, f.components());
  const double scale = 1.0 / static_cast<double>(g.size());
  Buffer buf(g.size());
  for (int c = 0; c < f.components(); ++c) {
    auto values = f.component(c);
    check_finite(values);
    std::transform(values.begin(), values.end(), buf.begin(),
                   [](double v) { return Complex(v, 0.0); });
    detail::fft_forward(g.n(), buf.data());
    auto dst = out.component(c);
    for (std::size_t i = 0; i < buf.size(); ++i) dst[i] = buf[i] * scale;
  }
  zero_nyquist(out);
  enforce_hermitian(out);
  return out;
}

PhysicalField to_physical(const SpectralField& f) {
  const Grid& g = f.grid();
  PhysicalField out(g, f.components());
  Buffer buf;
  for (int c = 0; c < f.components(); ++c) {
    check_finite(f.component(c));
    component_to_physical(f, c, false, buf);
    auto dst = out.component(c);
    for (std::size_t i = 0; i < buf.size(); ++i) dst[i] = buf[i].real();
  }
  return out;
}

void zero_nyquist(SpectralField& f) {
  const Grid& g = f.grid();
  for_each_mode(g, [&](std::size_t idx, const IVec3& k) {
    if (g.nyquist(k)) {
      for (int c = 0; c < f.components(); ++c) f.at(c, idx) = Complex{};
    }
  });
}

void enforce_hermitian(SpectralField& f) {
  const Grid& g = f.grid();
  for (int c = 0; c < f.components(); ++c) {
    auto comp = f.component(c);
    for (std::size_t idx = 0; idx < comp.size(); ++idx) {
      const std::size_t neg = g.negated(idx);
      if (neg < idx) continue;
      if (neg == idx) {
        comp[idx] = Complex(comp[idx].real(), 0.0);
        continue;
      }
      const Complex avg = 0.5 * (comp[idx] + std::conj(comp[neg]));
      comp[idx] = avg;
      comp[neg] = std::conj(avg);
    }
  }
}

double hermitian_defect(const SpectralField& f) {
  const Grid& g = f.grid();
  double worst = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    auto comp = f.component(c);
    for (std::size_t idx = 0; idx < comp.size(); ++idx) {
      worst = std::max(worst, std::abs(comp[idx] - std::conj(comp[g.negated(idx)])));
    }
  }
  return worst;
}

SpectralField leray_project(const SpectralField& u) {
  if (u.components() != 3) throw std::invalid_argument("leray_project expects a vector field");
  check_finite(u.data());
  const Grid& g = u.grid();
  SpectralField out(g, 3, u.time());
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    const CVec3 a{u.at(0, idx), u.at(1, idx), u.at(2, idx)};
    if (ki == IVec3{0, 0, 0}) {
      if (norm(a) != 0.0) warn("leray_project: nonzero mean passed through unchanged");
      for (int c = 0; c < 3; ++c) out.at(c, idx) = a[c];
      return;
    }
    const Vec3 k = g.physical(ki);
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    CVec3 r = a;
    /// A second pass removes the rounding left by the first when most of a is
    /// a gradient, so the per-mode tolerance holds relative to |P a|.
    for (int pass = 0; pass < 2; ++pass) {
      const Complex kdotr = (k[0] * r[0] + k[1] * r[1] + k[2] * r[2]) / k2;
      for (int c = 0; c < 3; ++c) r[c] -= k[c] * kdotr;
    }
    for (int c = 0; c < 3; ++c) out.at(c, idx) = r[c];
  });
  return out;
}

SpectralField derivative(const SpectralField& u, int axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
  const Grid& g = u.grid();
  SpectralField out(g, u.components(), u.time());
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    const Complex factor(0.0, ki[axis - 1] * g.dk());
    for (int c = 0; c < u.components(); ++c) out.at(c, idx) = factor * u.at(c, idx);
  });
  return out;
}

SpectralField divergence(const SpectralField& u) {
  if (u.components() != 3) throw std::invalid_argument("divergence expects a vector field");
  const Grid& g = u.grid();
  SpectralField out(g, 1, u.time());
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    const Vec3 k = g.physical(ki);
    Complex sum{};
    for (int c = 0; c < 3; ++c) sum += Complex(0.0, k[c]) * u.at(c, idx);
    out.at(0, idx) = sum;
  });
  return out;
}

double divergence_residual(const SpectralField& u) {
  if (u.components() != 3) throw std::invalid_argument("expected a vector field");
  const Grid& g = u.grid();
  double worst = 0.0;
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    if (ki == IVec3{0, 0, 0}) return;
    const CVec3 a{u.at(0, idx), u.at(1, idx), u.at(2, idx)};
    const double amp = norm(a);
    if (amp == 0.0) return;
    const Vec3 k = g.physical(ki);
    const double kn = norm(k);
    const Complex kdota = (k[0] * a[0] + k[1] * a[1] + k[2] * a[2]) / kn;
    worst = std::max(worst, std::abs(kdota) / amp);
  });
  return worst;
}

bool is_solenoidal(const SpectralField& u, double tol) {
  return u.components() == 3 && divergence_residual(u) <= tol;
}

SpectralField dealias(const SpectralField& u) {
  SpectralField out = u;
  const Grid& g = u.grid();
  for_each_mode(g, [&](std::size_t idx, const IVec3& k) {
    if (!g.dealiased(k)) {
      for (int c = 0; c < out.components(); ++c) out.at(c, idx) = Complex{};
    }
  });
  return out;
}

bool is_dealiased(const SpectralField& u) {
  const Grid& g = u.grid();
  bool ok = true;
  for_each_mode(g, [&](std::size_t idx, const IVec3& k) {
    if (g.dealiased(k)) return;
    for (int c = 0; c < u.components(); ++c) {
      if (u.at(c, idx) != Complex{}) ok = false;
    }
  });
  return ok;
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid() == g.grid()) || f.components() != g.components()) {
    throw std::invalid_argument("dealiased_product: mismatched fields");
  }
  const Grid& grid = f.grid();
  const double scale = 1.0 / static_cast<double>(grid.size());
  SpectralField out(grid, f.components(), f.time());
  Buffer fb, gb;
  for (int c = 0; c < f.components(); ++c) {
    component_to_physical(f, c, true, fb);
    component_to_physical(g, c, true, gb);
    for (std::size_t i = 0; i < fb.size(); ++i) fb[i] = Complex(fb[i].real() * gb[i].real(), 0.0);
    detail::fft_forward(grid.n(), fb.data());
    auto dst = out.component(c);
    for_each_mode(grid, [&](std::size_t idx, const IVec3& k) {
      dst[idx] = grid.dealiased(k) ? fb[idx] * scale : Complex{};
    });
  }
  enforce_hermitian(out);
  return out;
}

namespace {

SpectralField convective_divergence(const SpectralField& u, const SpectralField* v) {
  const Grid& g = u.grid();
  const double scale = 1.0 / static_cast<double>(g.size());
  std::vector<Buffer> uphys(3), vphys;
  for (int c = 0; c < 3; ++c) component_to_physical(u, c, true, uphys[c]);
  if (v != nullptr) {
    vphys.resize(3);
    for (int c = 0; c < 3; ++c) component_to_physical(*v, c, true, vphys[c]);
  }
  const auto& right = v != nullptr ? vphys : uphys;

  SpectralField div(g, 3, u.time());
  Buffer w(g.size());
  for (int i = 0; i < 3; ++i) {
    for (int j = (v != nullptr ? 0 : i); j < 3; ++j) {
      for (std::size_t x = 0; x < w.size(); ++x) {
        w[x] = Complex(uphys[i][x].real() * right[j][x].real(), 0.0);
      }
      detail::fft_forward(g.n(), w.data());
      const bool mirror = v == nullptr && i != j;
      for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
        if (!g.dealiased(ki)) return;
        const Complex wij = w[idx] * scale;
        div.at(i, idx) += Complex(0.0, ki[j] * g.dk()) * wij;
        if (mirror) div.at(j, idx) += Complex(0.0, ki[i] * g.dk()) * wij;
      });
    }
  }
  SpectralField out = leray_project(div);
  out *= -1.0;
  for (int c = 0; c < 3; ++c) out.at(c, std::size_t{0}) = Complex{};
  enforce_hermitian(out);
  return out;
}

}  // namespace

SpectralField bilinear_term(const SpectralField& u, const SpectralField& v) {
  if (!(u.grid() == v.grid())) throw std::invalid_argument("bilinear_term: mismatched grids");
  check_solenoidal(u);
  check_solenoidal(v);
  if (!u.mean_free() || !v.mean_free()) warn("bilinear_term: input has a nonzero mean");
  return convective_divergence(u, &v);
}

SpectralField nonlinear_term(const SpectralField& u) {
  check_solenoidal(u);
  if (!u.mean_free()) warn("nonlinear_term: input has a nonzero mean");
  return convective_divergence(u, nullptr);
}

double lp_norm(const PhysicalField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
  const std::size_t size = f.grid().size();
  const int nc = f.components();
  auto magnitude2 = [&](std::size_t i) {
    double m = 0.0;
    for (int c = 0; c < nc; ++c) m += f.at(c, i) * f.at(c, i);
    return m;
  };
  if (std::isinf(p)) {
    double worst = 0.0;
    for (std::size_t i = 0; i < size; ++i) worst = std::max(worst, magnitude2(i));
    return std::sqrt(worst);
  }
  double sum = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < size; ++i) sum += magnitude2(i);
  } else {
    for (std::size_t i = 0; i < size; ++i) sum += std::pow(magnitude2(i), 0.5 * p);
  }
  return std::pow(sum / static_cast<double>(size), 1.0 / p);
}

double lp_norm(const SpectralField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
  if (p == 2.0) return coefficient_norm(f);
  return lp_norm(to_physical(f), p);
}

double sobolev_norm(const SpectralField& u, double s) {
  const Grid& g = u.grid();
  double sum = 0.0;
  for_each_mode(g, [&](std::size_t idx, const IVec3& ki) {
    if (ki == IVec3{0, 0, 0}) return;
    double a2 = 0.0;
    for (int c = 0; c < u.components(); ++c) a2 += std::norm(u.at(c, idx));
    if (a2 == 0.0) return;
    const double k = norm(g.physical(ki));
    sum += std::pow(k, 2.0 * s) * a2;
  });
  return std::sqrt(sum);
}

double inner_product(const SpectralField& u, const SpectralField& v) {
  if (!(u.grid() == v.grid()) || u.components() != v.components()) {
    throw std::invalid_argument("inner_product: mismatched fields");
  }
  double sum = 0.0;
  auto a = u.data();
  auto b = v.data();
  for (std::size_t i = 0; i < a.size(); ++i) sum += (std::conj(a[i]) * b[i]).real();
  return sum;
}

SpectralField dyadic_rescale(const SpectralField& u, int m) {
  if (m < 0) throw std::invalid_argument("dyadic_rescale requires m >= 0");
  if (m == 0) return u;
  const Grid& g = u.grid();
  const int factor = 1 << m;
  SpectralField out(g, u.components(), u.time());
  for_each_mode(g, [&](std::size_t idx, const IVec3& k) {
    bool active = false;
    for (int c = 0; c < u.components(); ++c) active = active || u.at(c, idx) != Complex{};
    if (!active) return;
    const IVec3 target{k[0] * factor, k[1] * factor, k[2] * factor};
    for (int a : target) {
      if (2 * std::abs(a) >= g.n()) {
        throw std::invalid_argument("support too large for requested m");
      }
    }
    const std::size_t t = g.flat(target);
    for (int c = 0; c < u.components(); ++c) out.at(c, t) = static_cast<double>(factor) * u.at(c, idx);
  });
  return out;
}

double coefficient_distance(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()) || a.components() != b.components()) {
    throw std::invalid_argument("coefficient_distance: mismatched fields");
  }
  double sum = 0.0;
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) sum += std::norm(x[i] - y[i]);
  return std::sqrt(sum);
}

double coefficient_norm(const SpectralField& a) {
  double sum = 0.0;
  for (const auto& z : a.data()) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace rotns
