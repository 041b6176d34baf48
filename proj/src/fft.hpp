#pragma once

#include <complex>

namespace rotns::detail {

/// In-place 3D complex transforms on an n^3 array in row-major order.
/// forward computes sum_x f(x) e^{-ik.x} (no normalization); backward the
/// conjugate sum.
void fft_forward(int n, std::complex<double>* data);
void fft_backward(int n, std::complex<double>* data);

}  // namespace rotns::detail
