// Compiled with -mavx2; only reached when the CPU reports AVX2 support.

#include <immintrin.h>

#include <bit>

#include "critnum/kernels.hpp"

namespace critnum::kernels {

namespace {

inline std::uint64_t masked(const std::uint64_t* src, const std::uint64_t* mask, std::size_t i) {
  return mask ? (src[i] & mask[i]) : src[i];
}

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline __m256i load_masked(const std::uint64_t* src, const std::uint64_t* mask, std::size_t i) {
  const __m256i v = load(src + i);
  return mask ? _mm256_and_si256(v, load(mask + i)) : v;
}

inline void or_store(std::uint64_t* dst, std::size_t i, __m256i v) {
  auto* p = reinterpret_cast<__m256i*>(dst + i);
  _mm256_storeu_si256(p, _mm256_or_si256(_mm256_loadu_si256(p), v));
}

void or_shift_left_avx2(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                        std::size_t words, std::size_t shift) {
  const std::size_t q = shift / 64;
  const unsigned b = shift % 64;
  if (q >= words) return;
  // Lane count >= 64 makes the AVX2 shifts produce zero, so b == 0 needs no branch.
  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(b));
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(64 - b));

  dst[q] |= masked(src, mask, 0) << b;
  std::size_t i = q + 1;
  for (; i + 4 <= words; i += 4) {
    const __m256i cur = load_masked(src, mask, i - q);
    const __m256i prev = load_masked(src, mask, i - q - 1);
    or_store(dst, i, _mm256_or_si256(_mm256_sll_epi64(cur, lo_count),
                                     _mm256_srl_epi64(prev, hi_count)));
  }
  for (; i < words; ++i) {
    std::uint64_t v = masked(src, mask, i - q) << b;
    if (b != 0) v |= masked(src, mask, i - q - 1) >> (64 - b);
    dst[i] |= v;
  }
}

void or_shift_right_avx2(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                         std::size_t words, std::size_t shift) {
  const std::size_t q = shift / 64;
  const unsigned b = shift % 64;
  if (q >= words) return;
  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(b));
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(64 - b));

  std::size_t i = 0;
  for (; i + q + 5 <= words; i += 4) {
    const __m256i cur = load_masked(src, mask, i + q);
    const __m256i next = load_masked(src, mask, i + q + 1);
    or_store(dst, i, _mm256_or_si256(_mm256_srl_epi64(cur, lo_count),
                                     _mm256_sll_epi64(next, hi_count)));
  }
  for (; i + q < words; ++i) {
    std::uint64_t v = masked(src, mask, i + q) >> b;
    if (b != 0 && i + q + 1 < words) v |= masked(src, mask, i + q + 1) << (64 - b);
    dst[i] |= v;
  }
}

void or_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) or_store(dst, i, load(src + i));
  for (; i < words; ++i) dst[i] |= src[i];
}

// Nibble-table popcount: pshufb looks up each nibble, sad sums bytes per lane.
std::size_t popcount_avx2(const std::uint64_t* src, std::size_t words) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibble = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = load(src + i);
    const __m256i lo = _mm256_and_si256(v, low_nibble);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo),
                                          _mm256_shuffle_epi8(table, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
  return total;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Backend::Avx2, or_shift_left_avx2, or_shift_right_avx2,
                                 or_into_avx2, popcount_avx2};
  return table;
}

}  // namespace critnum::kernels
