#include "shearcst/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace shearcst::fft {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  ~PlanPair() {
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
};

// fftw planning is not thread-safe; execution of an existing plan on new arrays is.
const PlanPair& plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<PlanPair>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<PlanPair>();
    std::vector<cplx> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    const int len = static_cast<int>(n);
    slot->fwd = fftw_plan_dft_1d(len, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    slot->bwd = fftw_plan_dft_1d(len, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  return *slot;
}

}  // namespace

void forward(std::span<cplx> data) {
  if (data.empty()) return;
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_for(data.size()).fwd, p, p);
}

void backward(std::span<cplx> data) {
  if (data.empty()) return;
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_for(data.size()).bwd, p, p);
}

}  // namespace shearcst::fft
