// AArch64 only; Advanced SIMD is part of the base ISA there.

#include <arm_neon.h>

#include <bit>

#include "critnum/kernels.hpp"

namespace critnum::kernels {

namespace {

inline std::uint64_t masked(const std::uint64_t* src, const std::uint64_t* mask, std::size_t i) {
  return mask ? (src[i] & mask[i]) : src[i];
}

inline uint64x2_t load_masked(const std::uint64_t* src, const std::uint64_t* mask, std::size_t i) {
  const uint64x2_t v = vld1q_u64(src + i);
  return mask ? vandq_u64(v, vld1q_u64(mask + i)) : v;
}

// vshlq_u64 shifts left for positive counts and right for negative ones;
// magnitudes of 64 yield zero.
void or_shift_left_neon(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                        std::size_t words, std::size_t shift) {
  const std::size_t q = shift / 64;
  const int b = static_cast<int>(shift % 64);
  if (q >= words) return;
  const int64x2_t up = vdupq_n_s64(b);
  const int64x2_t down = vdupq_n_s64(b - 64);

  dst[q] |= masked(src, mask, 0) << b;
  std::size_t i = q + 1;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t v = vorrq_u64(vshlq_u64(load_masked(src, mask, i - q), up),
                                   vshlq_u64(load_masked(src, mask, i - q - 1), down));
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), v));
  }
  for (; i < words; ++i) {
    std::uint64_t v = masked(src, mask, i - q) << b;
    if (b != 0) v |= masked(src, mask, i - q - 1) >> (64 - b);
    dst[i] |= v;
  }
}

void or_shift_right_neon(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                         std::size_t words, std::size_t shift) {
  const std::size_t q = shift / 64;
  const int b = static_cast<int>(shift % 64);
  if (q >= words) return;
  const int64x2_t down = vdupq_n_s64(-b);
  const int64x2_t up = vdupq_n_s64(64 - b);

  std::size_t i = 0;
  for (; i + q + 3 <= words; i += 2) {
    const uint64x2_t v = vorrq_u64(vshlq_u64(load_masked(src, mask, i + q), down),
                                   vshlq_u64(load_masked(src, mask, i + q + 1), up));
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), v));
  }
  for (; i + q < words; ++i) {
    std::uint64_t v = masked(src, mask, i + q) >> b;
    if (b != 0 && i + q + 1 < words) v |= masked(src, mask, i + q + 1) << (64 - b);
    dst[i] |= v;
  }
}

void or_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

std::size_t popcount_neon(const std::uint64_t* src, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(src + i)));
    total += vaddvq_u8(bytes);
  }
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
  return total;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Backend::Neon, or_shift_left_neon, or_shift_right_neon,
                                 or_into_neon, popcount_neon};
  return table;
}

}  // namespace critnum::kernels
