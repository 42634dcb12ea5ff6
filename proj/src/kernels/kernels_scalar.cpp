#include <bit>

#include "critnum/kernels.hpp"

namespace critnum::kernels {

namespace {

inline std::uint64_t masked(const std::uint64_t* src, const std::uint64_t* mask, std::size_t i) {
  return mask ? (src[i] & mask[i]) : src[i];
}

void or_shift_left_scalar(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                          std::size_t words, std::size_t shift) {
  const std::size_t q = shift / 64;
  const unsigned b = shift % 64;
  if (q >= words) return;
  for (std::size_t i = words; i-- > q;) {
    std::uint64_t v = masked(src, mask, i - q) << b;
    if (b != 0 && i > q) v |= masked(src, mask, i - q - 1) >> (64 - b);
    dst[i] |= v;
  }
}

void or_shift_right_scalar(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                           std::size_t words, std::size_t shift) {
  const std::size_t q = shift / 64;
  const unsigned b = shift % 64;
  if (q >= words) return;
  for (std::size_t i = 0; i + q < words; ++i) {
    std::uint64_t v = masked(src, mask, i + q) >> b;
    if (b != 0 && i + q + 1 < words) v |= masked(src, mask, i + q + 1) << (64 - b);
    dst[i] |= v;
  }
}

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

std::size_t popcount_scalar(const std::uint64_t* src, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
  return total;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Backend::Scalar, or_shift_left_scalar, or_shift_right_scalar,
                                 or_into_scalar, popcount_scalar};
  return table;
}

}  // namespace critnum::kernels
