#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gbz/simd/kernels.hpp"

namespace gbz::simd {

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("ISA " + std::string(isa_name(isa)) +
                                " not available on this CPU");
  }
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::kAvx2:
      return detail::kAvx2Kernels;
#endif
#if defined(__aarch64__)
    case Isa::kNeon:
      return detail::kNeonKernels;
#endif
    default:
      return detail::kScalarKernels;
  }
}

const KernelTable& kernels() {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* forced = std::getenv("GBZ_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") {
      return detail::kScalarKernels;
    }
    if (isa_available(Isa::kAvx2)) return kernels_for(Isa::kAvx2);
    if (isa_available(Isa::kNeon)) return kernels_for(Isa::kNeon);
    return detail::kScalarKernels;
  }();
  return table;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

}  // namespace gbz::simd
