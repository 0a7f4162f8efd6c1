#include "kreweras/simd/modp.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace kreweras::simd {

namespace {

// x mod p for eight lanes with x < 2^32, using q = hi32(x * m).
__attribute__((target("avx2"))) inline __m256i reduce(__m256i x, __m256i vm, __m256i vp, __m256i vpm1) {
  const __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, vm), 32);
  const __m256i q_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vm);
  const __m256i q = _mm256_blend_epi32(q_even, q_odd, 0xAA);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  // r in [0, 2p): subtract p where r > p - 1
  const __m256i over = _mm256_cmpgt_epi32(r, vpm1);
  return _mm256_sub_epi32(r, _mm256_and_si256(over, vp));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                                                   std::size_t n, std::uint32_t p) {
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_m(p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(x, vm, vp, vpm1));
  }
  axpy_mod_scalar(dst + i, src + i, c, n - i, p);
}

__attribute__((target("avx2"))) void scale_mod_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_m(p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(_mm256_mullo_epi32(d, vc), vm, vp, vpm1));
  }
  scale_mod_scalar(dst + i, c, n - i, p);
}

}  // namespace kreweras::simd

#else

namespace kreweras::simd {
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  axpy_mod_scalar(dst, src, c, n, p);
}
void scale_mod_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) { scale_mod_scalar(dst, c, n, p); }
}  // namespace kreweras::simd

#endif
