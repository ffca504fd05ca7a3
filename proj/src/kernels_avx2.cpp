#include "fzeta/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstring>

namespace fzeta::kernels {

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

void conv_i32_avx2(const std::int32_t* a, std::size_t na, const std::int32_t* b,
                   std::size_t nb, std::int64_t* out) {
  if (na == 0 || nb == 0) return;
  std::memset(out, 0, sizeof(std::int64_t) * (na + nb - 1));
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    // _mm256_mul_epi32 multiplies the signed low 32 bits of each 64-bit lane,
    // so broadcasting the raw 32-bit pattern of a[i] is enough.
    const __m256i va = _mm256_set1_epi64x(
        static_cast<std::int64_t>(static_cast<std::uint32_t>(a[i])));
    std::int64_t* o = out + i;
    std::size_t j = 0;
    for (; j + 4 <= nb; j += 4) {
      const __m256i vb = _mm256_cvtepi32_epi64(
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + j)));
      __m256i acc = _mm256_loadu_si256(reinterpret_cast<__m256i*>(o + j));
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(o + j), acc);
    }
    const std::int64_t ai = a[i];
    for (; j < nb; ++j) o[j] += ai * b[j];
  }
}

}  // namespace fzeta::kernels

#endif
