#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critnum/error.hpp"
#include "critnum/kernels.hpp"
#include "critnum/sumset.hpp"
#include "reference.hpp"

using namespace critnum;
using kernels::Backend;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng();
  return w;
}

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(kernels::available(Backend::Scalar));
  const auto all = kernels::available_backends();
  CHECK(!all.empty());
  MESSAGE("active backend: " << kernels::to_string(kernels::active_backend()));
}

TEST_CASE("unavailable backend is reported") {
  for (auto b : {Backend::Avx2, Backend::Neon}) {
    if (kernels::available(b)) continue;
    CHECK_THROWS_AS(kernels::set_backend(b), Error);
  }
}

TEST_CASE("shift kernels match a bit-by-bit model") {
  const auto& s = kernels::scalar_table();
  std::mt19937_64 rng(3);
  for (std::size_t words : {1, 2, 3, 5, 9}) {
    for (std::size_t shift : {0, 1, 7, 63, 64, 65, 100, 127, 200, 575, 600}) {
      const auto src = random_words(rng, words);
      const auto mask = random_words(rng, words);
      std::vector<std::uint64_t> left(words, 0), right(words, 0), want_l(words, 0), want_r(words, 0);
      s.or_shift_left(left.data(), src.data(), mask.data(), words, shift);
      s.or_shift_right(right.data(), src.data(), mask.data(), words, shift);
      const std::size_t bits = 64 * words;
      for (std::size_t i = 0; i < bits; ++i) {
        const bool on = ((src[i / 64] & mask[i / 64]) >> (i % 64)) & 1U;
        if (!on) continue;
        if (i + shift < bits) want_l[(i + shift) / 64] |= std::uint64_t{1} << ((i + shift) % 64);
        if (i >= shift) want_r[(i - shift) / 64] |= std::uint64_t{1} << ((i - shift) % 64);
      }
      CHECK(left == want_l);
      CHECK(right == want_r);
    }
  }
}

TEST_CASE("every SIMD backend is bit-identical to the scalar reference") {
  const auto& ref = kernels::scalar_table();
  std::mt19937_64 rng(17);
  for (auto backend : kernels::available_backends()) {
    if (backend == Backend::Scalar) continue;
    kernels::ScopedBackend scope(backend);
    const auto& simd = kernels::active();
    CAPTURE(kernels::to_string(backend));
    for (int trial = 0; trial < 2000; ++trial) {
      const std::size_t words = 1 + rng() % 23;
      const std::size_t shift = rng() % (64 * words + 70);
      const auto src = random_words(rng, words);
      const auto mask = random_words(rng, words);
      auto dst_ref = random_words(rng, words);
      auto dst_simd = dst_ref;
      const std::uint64_t* m = (trial % 3 == 0) ? nullptr : mask.data();

      ref.or_shift_left(dst_ref.data(), src.data(), m, words, shift);
      simd.or_shift_left(dst_simd.data(), src.data(), m, words, shift);
      REQUIRE(dst_ref == dst_simd);

      ref.or_shift_right(dst_ref.data(), src.data(), m, words, shift);
      simd.or_shift_right(dst_simd.data(), src.data(), m, words, shift);
      REQUIRE(dst_ref == dst_simd);

      ref.or_into(dst_ref.data(), src.data(), words);
      simd.or_into(dst_simd.data(), src.data(), words);
      REQUIRE(dst_ref == dst_simd);

      CHECK(ref.popcount(src.data(), words) == simd.popcount(src.data(), words));
    }
  }
}

TEST_CASE("sumset results agree across backends") {
  std::mt19937_64 rng(23);
  std::vector<GroupType> types;
  for (auto literal : {"7", "64", "65", "129", "2,4", "3,3,9", "2,2,2,2,2,2,2", "5,200", "1000", "4,4,40"}) {
    types.push_back(GroupType::parse(literal));
  }
  for (const auto& t : types) {
    const Group g(t);
    for (int trial = 0; trial < 6; ++trial) {
      auto a = reference::random_subset(g, rng, 0.02 + 0.05 * trial);
      if (a.empty()) a.insert(1 % g.order());
      const auto b = reference::random_subset(g, rng, 0.03);
      std::vector<GroupSubset> results;
      for (auto backend : kernels::available_backends()) {
        kernels::ScopedBackend scope(backend);
        results.push_back(sumset(a, b));
        results.push_back(hfold_sumset(a, 3));
        results.push_back(interval_sumset(a, 2));
      }
      for (std::size_t i = 3; i < results.size(); ++i) CHECK(results[i] == results[i % 3]);
    }
  }
}
