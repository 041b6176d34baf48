#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace rotns::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// fftw planning is not thread-safe; plan creation is serialized and plans are
// kept for the lifetime of the process.
const PlanPair& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n) * n * n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.forward = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_FORWARD, flags);
  p.backward = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD, flags);
  return cache.emplace(n, p).first->second;
}

}  // namespace

void fft_forward(int n, std::complex<double>* data) {
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plans_for(n).forward, buf, buf);
}

void fft_backward(int n, std::complex<double>* data) {
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plans_for(n).backward, buf, buf);
}

}  // namespace rotns::detail
