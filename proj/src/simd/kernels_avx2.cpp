#include "biord/simd/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define BIORD_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace biord::simd {

#if BIORD_HAVE_AVX2_KERNELS

namespace {

// Low 64 bits of a 64x64 product per lane. AVX2 only multiplies 32-bit halves,
// so lo*lo + ((hi_a*lo_b + lo_a*hi_b) << 32).
__attribute__((target("avx2"))) inline __m256i mullo_epi64(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross =
      _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

__attribute__((target("avx2"))) void axpy_avx2(std::int64_t* dst,
                                                const std::int64_t* src,
                                                std::size_t n,
                                                std::int64_t scale) {
  std::size_t i = 0;
  if (scale == 1) {
    for (; i + 4 <= n; i += 4) {
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(d, s));
    }
  } else {
    const __m256i k = _mm256_set1_epi64x(scale);
    for (; i + 4 <= n; i += 4) {
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                          _mm256_add_epi64(d, mullo_epi64(s, k)));
    }
  }
  const auto s = static_cast<std::uint64_t>(scale);
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       s * static_cast<std::uint64_t>(src[i]));
}

__attribute__((target("avx2"))) std::size_t first_nonzero_avx2(
    const std::int64_t* data, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const int eq = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, zero)));
    if (eq != 0xF) return i + static_cast<std::size_t>(__builtin_ctz(~eq & 0xF));
  }
  for (; i < n; ++i)
    if (data[i] != 0) return i;
  return n;
}

constexpr Kernels kAvx2{"avx2", &axpy_avx2, &first_nonzero_avx2};

}  // namespace

const Kernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace biord::simd
