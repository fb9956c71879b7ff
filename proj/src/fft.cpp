#include "gbz/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>

namespace gbz {

namespace {

// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
std::unique_ptr<T[], FftwFree> fftw_buffer(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (p == nullptr) throw std::bad_alloc();
  return std::unique_ptr<T[], FftwFree>(p);
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> self_convolve(std::span<const double> a,
                                  std::size_t out_len) {
  const std::size_t L = next_pow2(std::max<std::size_t>(2 * a.size(), 2));
  auto real = fftw_buffer<double>(L);
  auto spec = fftw_buffer<fftw_complex>(L / 2 + 1);
  Plan fwd, inv;
  {
    std::lock_guard lock(planner_mutex());
    fwd.reset(fftw_plan_dft_r2c_1d(static_cast<int>(L), real.get(), spec.get(),
                                   FFTW_ESTIMATE));
    inv.reset(fftw_plan_dft_c2r_1d(static_cast<int>(L), spec.get(), real.get(),
                                   FFTW_ESTIMATE));
  }
  std::fill(real.get(), real.get() + L, 0.0);
  std::copy(a.begin(), a.end(), real.get());
  fftw_execute(fwd.get());
  for (std::size_t k = 0; k < L / 2 + 1; ++k) {
    const double re = spec[k][0];
    const double im = spec[k][1];
    spec[k][0] = re * re - im * im;
    spec[k][1] = 2.0 * re * im;
  }
  fftw_execute(inv.get());
  std::vector<double> out(out_len, 0.0);
  const double norm = 1.0 / static_cast<double>(L);
  for (std::size_t n = 0; n < std::min(out_len, L); ++n) out[n] = real[n] * norm;
  return out;
}

void dft_positive(std::vector<std::complex<double>>& data) {
  const std::size_t M = data.size();
  if (M == 0) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    // FFTW_ESTIMATE leaves the input untouched while planning.
    plan.reset(fftw_plan_dft_1d(static_cast<int>(M), buf, buf, FFTW_BACKWARD,
                                FFTW_ESTIMATE));
  }
  fftw_execute(plan.get());
}

}  // namespace gbz
