#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "fzeta/kernels.hpp"

using namespace fzeta::kernels;

namespace {

std::vector<std::int64_t> conv_ref(const std::vector<std::int32_t>& a,
                                   const std::vector<std::int32_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += static_cast<std::int64_t>(a[i]) * b[j];
  return out;
}

}  // namespace

TEST_CASE("scalar kernel matches the naive definition") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int32_t> coeff(-1000000, 1000000);
  std::uniform_int_distribution<std::size_t> len(1, 64);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::int32_t> a(len(rng)), b(len(rng));
    for (auto& v : a) v = coeff(rng);
    for (auto& v : b) v = coeff(rng);
    std::vector<std::int64_t> out(a.size() + b.size() - 1, -1);
    conv_i32_scalar(a.data(), a.size(), b.data(), b.size(), out.data());
    CHECK(out == conv_ref(a, b));
  }
}

#if defined(__x86_64__) || defined(__i386__)
TEST_CASE("avx2 kernel agrees with scalar on random inputs") {
  if (!avx2_supported()) {
    MESSAGE("AVX2 not available on this machine; skipping");
    return;
  }
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int32_t> coeff(-2000000, 2000000);
  std::uniform_int_distribution<std::size_t> len(1, 200);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::int32_t> a(len(rng)), b(len(rng));
    for (auto& v : a) v = coeff(rng);
    for (auto& v : b) v = coeff(rng);
    std::vector<std::int64_t> s(a.size() + b.size() - 1, 0);
    std::vector<std::int64_t> v(a.size() + b.size() - 1, 0);
    conv_i32_scalar(a.data(), a.size(), b.data(), b.size(), s.data());
    conv_i32_avx2(a.data(), a.size(), b.data(), b.size(), v.data());
    CHECK(s == v);
  }
}

TEST_CASE("edge lengths: 1x1, 1xN, tail remainders") {
  if (!avx2_supported()) return;
  for (std::size_t na : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 17u})
    for (std::size_t nb : {1u, 2u, 3u, 4u, 5u, 8u, 13u}) {
      std::vector<std::int32_t> a(na), b(nb);
      for (std::size_t i = 0; i < na; ++i) a[i] = static_cast<std::int32_t>(i + 1);
      for (std::size_t j = 0; j < nb; ++j) b[j] = static_cast<std::int32_t>(j) - 3;
      std::vector<std::int64_t> s(na + nb - 1, 0), v(na + nb - 1, 0);
      conv_i32_scalar(a.data(), na, b.data(), nb, s.data());
      conv_i32_avx2(a.data(), na, b.data(), nb, v.data());
      CHECK(s == v);
    }
}
#endif

TEST_CASE("dispatch override and reset") {
  reset_dispatch();
  const Backend detected = active();
  CHECK_NOTHROW(force(Backend::scalar));
  CHECK(active() == Backend::scalar);
  std::int32_t a[3] = {1, -2, 3};
  std::int32_t b[2] = {4, 5};
  std::int64_t out[4];
  conv_i32(a, 3, b, 2, out);
  CHECK(out[0] == 4);
  CHECK(out[1] == -3);
  CHECK(out[2] == 2);
  CHECK(out[3] == 15);
  reset_dispatch();
  CHECK(active() == detected);
  CHECK(!backend_name(active()).empty());
}

TEST_CASE("overflow bound certifies safe products only") {
  // (2^20)^2 * 64 terms ~ 2^46: safe.
  CHECK(conv_fits_i64(1u << 20, 1u << 20, 64, 64));
  // (2^31)^2 alone exceeds 2^62: unsafe even for one term.
  CHECK(!conv_fits_i64(1ull << 31, 1ull << 31, 1, 1));
  // Length pushes a safe magnitude over the line.
  CHECK(conv_fits_i64(1ull << 28, 1ull << 28, 4, 4));
  CHECK(!conv_fits_i64(1ull << 28, 1ull << 28, 100, 100));
  CHECK(conv_fits_i64(0, 0, 1000, 1000));
}
