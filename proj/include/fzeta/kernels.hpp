#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Dense integer convolution kernels backing the small-coefficient fast path of
// polynomial multiplication. Inputs are int32, accumulation is int64; the caller
// must guarantee no accumulator overflow (see conv_fits_i64). A scalar reference
// implementation is always available; on x86 an AVX2 variant is selected at
// runtime when the CPU supports it. The exact bignum path stays authoritative:
// these kernels only ever replace it when the overflow bound provably holds.

namespace fzeta::kernels {

enum class Backend { scalar, avx2, neon };

/// Backend chosen for dispatched calls. Detected once at first use.
Backend active();

/// Overrides backend selection (tests). Throws std::runtime_error if the
/// requested backend is not available on this machine/build.
void force(Backend b);

/// Clears any force() override and re-detects.
void reset_dispatch();

std::string backend_name(Backend b);

/// out[0 .. na+nb-2] = sum_{i+j=k} a[i]*b[j]. Overwrites out. na, nb >= 1.
void conv_i32(const std::int32_t* a, std::size_t na, const std::int32_t* b,
              std::size_t nb, std::int64_t* out);

/// Reference implementation, always available (used in equivalence tests).
void conv_i32_scalar(const std::int32_t* a, std::size_t na, const std::int32_t* b,
                     std::size_t nb, std::int64_t* out);

#if defined(__x86_64__) || defined(__i386__)
/// AVX2 implementation; call only when the CPU supports AVX2.
void conv_i32_avx2(const std::int32_t* a, std::size_t na, const std::int32_t* b,
                   std::size_t nb, std::int64_t* out);
bool avx2_supported();
#endif

/// True if a convolution of lengths na, nb with |a_i| <= max_a, |b_j| <= max_b
/// cannot overflow int64 accumulators (checked in 128-bit with margin).
bool conv_fits_i64(std::uint64_t max_a, std::uint64_t max_b, std::size_t na,
                   std::size_t nb);

}  // namespace fzeta::kernels
