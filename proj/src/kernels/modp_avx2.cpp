#include <immintrin.h>

#include <cmath>

#include "symprod/kernels/modp.hpp"

namespace symprod::kernels::avx2 {

namespace {

// Reduce four exact doubles in [0, 2^53) modulo p. The quotient estimate
// can be off by one in either direction; two conditional fix-ups repair it.
inline __m256d reduce(__m256d x, __m256d pv, __m256d pinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
  __m256d r = _mm256_fnmadd_pd(q, pv, x);
  __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pv));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pv, _CMP_GE_OQ), pv));
  return r;
}

inline __m256d load4(const std::uint32_t* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

inline void store4(std::uint32_t* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvttpd_epi32(v));
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p) {
  const __m256d pv = _mm256_set1_pd(double(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / double(p));
  const __m256d sv = _mm256_set1_pd(double(s));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_fmadd_pd(sv, load4(src + i), load4(dst + i));
    store4(dst + i, reduce(x, pv, pinv));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t(s) * src[i]) % p);
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t s, std::uint32_t p) {
  const __m256d pv = _mm256_set1_pd(double(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / double(p));
  const __m256d sv = _mm256_set1_pd(double(s));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store4(v + i, reduce(_mm256_mul_pd(sv, load4(v + i)), pv, pinv));
  for (; i < n; ++i) v[i] = static_cast<std::uint32_t>(std::uint64_t(s) * v[i] % p);
}

}  // namespace symprod::kernels::avx2
