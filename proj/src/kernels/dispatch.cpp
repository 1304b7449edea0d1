#include <atomic>

#include "symprod/kernels/modp.hpp"

namespace symprod::kernels {

namespace {

std::atomic<bool> scalar_forced{false};

bool detect_avx2() noexcept {
#if defined(SYMPROD_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool use_avx2() noexcept {
  static const bool ok = detect_avx2();
  return ok && !scalar_forced.load(std::memory_order_relaxed);
}

}  // namespace

bool avx2_available() noexcept {
  static const bool ok = detect_avx2();
  return ok;
}

std::string_view active_variant() noexcept { return use_avx2() ? "avx2" : "scalar"; }

void force_scalar(bool on) noexcept { scalar_forced.store(on, std::memory_order_relaxed); }

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p) {
#ifdef SYMPROD_HAVE_AVX2
  if (use_avx2()) return avx2::axpy_mod(dst, src, n, s, p);
#endif
  scalar::axpy_mod(dst, src, n, s, p);
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t s, std::uint32_t p) {
#ifdef SYMPROD_HAVE_AVX2
  if (use_avx2()) return avx2::scale_mod(v, n, s, p);
#endif
  scalar::scale_mod(v, n, s, p);
}

}  // namespace symprod::kernels
