#include "fzeta/kernels.hpp"

#include <cstring>
#include <stdexcept>

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace fzeta::kernels {

void conv_i32_scalar(const std::int32_t* a, std::size_t na, const std::int32_t* b,
                     std::size_t nb, std::int64_t* out) {
  if (na == 0 || nb == 0) return;
  std::memset(out, 0, sizeof(std::int64_t) * (na + nb - 1));
  for (std::size_t i = 0; i < na; ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    std::int64_t* o = out + i;
    for (std::size_t j = 0; j < nb; ++j) o[j] += ai * b[j];
  }
}

#if defined(__aarch64__) && defined(__ARM_NEON)
static void conv_i32_neon(const std::int32_t* a, std::size_t na,
                          const std::int32_t* b, std::size_t nb,
                          std::int64_t* out) {
  if (na == 0 || nb == 0) return;
  std::memset(out, 0, sizeof(std::int64_t) * (na + nb - 1));
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    const int32x2_t va = vdup_n_s32(a[i]);
    std::int64_t* o = out + i;
    std::size_t j = 0;
    for (; j + 2 <= nb; j += 2) {
      int64x2_t acc = vld1q_s64(o + j);
      acc = vaddq_s64(acc, vmull_s32(va, vld1_s32(b + j)));
      vst1q_s64(o + j, acc);
    }
    for (; j < nb; ++j) o[j] += static_cast<std::int64_t>(a[i]) * b[j];
  }
}
#endif

namespace {

Backend detect() {
#if defined(__x86_64__) || defined(__i386__)
  if (avx2_supported()) return Backend::avx2;
#elif defined(__aarch64__) && defined(__ARM_NEON)
  return Backend::neon;
#endif
  return Backend::scalar;
}

Backend g_active = detect();
bool g_forced = false;

}  // namespace

Backend active() { return g_active; }

void force(Backend b) {
  switch (b) {
    case Backend::scalar:
      break;
    case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__)
      if (!avx2_supported()) throw std::runtime_error("AVX2 not supported here");
      break;
#else
      throw std::runtime_error("AVX2 backend not built on this architecture");
#endif
    case Backend::neon:
#if !(defined(__aarch64__) && defined(__ARM_NEON))
      throw std::runtime_error("NEON backend not built on this architecture");
#else
      break;
#endif
  }
  g_active = b;
  g_forced = true;
}

void reset_dispatch() {
  g_active = detect();
  g_forced = false;
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

void conv_i32(const std::int32_t* a, std::size_t na, const std::int32_t* b,
              std::size_t nb, std::int64_t* out) {
  switch (g_active) {
#if defined(__x86_64__) || defined(__i386__)
    case Backend::avx2:
      conv_i32_avx2(a, na, b, nb, out);
      return;
#endif
#if defined(__aarch64__) && defined(__ARM_NEON)
    case Backend::neon:
      conv_i32_neon(a, na, b, nb, out);
      return;
#endif
    default:
      conv_i32_scalar(a, na, b, nb, out);
      return;
  }
}

bool conv_fits_i64(std::uint64_t max_a, std::uint64_t max_b, std::size_t na,
                   std::size_t nb) {
  if (na == 0 || nb == 0) return true;
  const unsigned __int128 terms = na < nb ? na : nb;
  const unsigned __int128 bound =
      terms * static_cast<unsigned __int128>(max_a) * max_b;
  // One spare bit of margin below the int64 limit.
  return bound < (static_cast<unsigned __int128>(1) << 62);
}

}  // namespace fzeta::kernels
