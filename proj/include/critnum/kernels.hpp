#pragma once

// Word-parallel bit-vector kernels behind the sumset engine.
//
// Every backend implements the same table; the scalar one is the reference
// and the SIMD ones are tested for bit-identical output against it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace critnum::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend backend);

struct KernelTable {
  Backend backend;
  // dst |= (src & mask) << shift over a `words`-word little-endian bit vector;
  // bits shifted past the end are dropped. mask == nullptr means all ones.
  void (*or_shift_left)(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                        std::size_t words, std::size_t shift);
  // dst |= (src & mask) >> shift.
  void (*or_shift_right)(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                         std::size_t words, std::size_t shift);
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  std::size_t (*popcount)(const std::uint64_t* src, std::size_t words);
};

const KernelTable& scalar_table();
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
const KernelTable& avx2_table();
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
const KernelTable& neon_table();
#endif

/// Compiled in and supported by the running CPU.
bool available(Backend backend);
std::vector<Backend> available_backends();

/// Table currently used by the engine. Chosen at first use: the best available
/// backend, unless CRITNUM_KERNELS=scalar|avx2|neon says otherwise.
const KernelTable& active();
Backend active_backend();
/// Switches the engine's backend. Throws BackendUnavailable.
void set_backend(Backend backend);

/// Restores the previous backend on scope exit.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend backend);
  ~ScopedBackend();
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend previous_;
};

// Span front-ends used by the engine.
inline void or_shift_left(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                          const std::uint64_t* mask, std::size_t shift) {
  active().or_shift_left(dst.data(), src.data(), mask, dst.size(), shift);
}
inline void or_shift_right(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                           const std::uint64_t* mask, std::size_t shift) {
  active().or_shift_right(dst.data(), src.data(), mask, dst.size(), shift);
}
inline void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  active().or_into(dst.data(), src.data(), dst.size());
}
inline std::size_t popcount(std::span<const std::uint64_t> src) {
  return active().popcount(src.data(), src.size());
}

}  // namespace critnum::kernels
