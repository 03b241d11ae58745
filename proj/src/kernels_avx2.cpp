// AVX2 variants of the bit-vector kernels. Compiled with -mavx2 and picked
// at runtime only when the CPU reports AVX2, so the rest of the library can
// be built without target-specific flags.

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "relsem/kernels.hpp"

namespace relsem::kern {

namespace {

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void v_or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

void v_and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] &= src[i];
}

void v_diff_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
  for (; i < words; ++i) dst[i] &= ~src[i];
}

bool v_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4)
    acc = _mm256_or_si256(acc, _mm256_andnot_si256(load(b + i), load(a + i)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool v_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4)
    acc = _mm256_or_si256(acc, _mm256_xor_si256(load(a + i), load(b + i)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < words; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool v_any(const std::uint64_t* a, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = load(a + i);
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < words; ++i)
    if (a[i]) return true;
  return false;
}

// Nibble-LUT popcount; horizontal sums accumulated with vpsadbw.
std::uint64_t v_popcount(const std::uint64_t* a, std::size_t words) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3,
                                       3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3,
                                       2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i total = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = load(a + i);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                  _mm256_shuffle_epi8(lut, hi));
    total = _mm256_add_epi64(total, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
  std::uint64_t n = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) n += std::popcount(a[i]);
  return n;
}

constexpr Ops kAvx2{
    "avx2",   v_or_into, v_and_into, v_diff_into,
    v_subset, v_equal,   v_any,      v_popcount,
};

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

const Ops& avx2_ops() { return kAvx2; }

}  // namespace relsem::kern
