#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critnum/error.hpp"
#include "critnum/sumset.hpp"
#include "reference.hpp"

using namespace critnum;

namespace {

Group G(const char* literal) { return Group(GroupType::parse(literal)); }

GroupSubset S(const Group& g, std::initializer_list<ElementIndex> xs) { return GroupSubset::from_indices(g, xs); }

// All subsets of a group with n <= 16 as masks.
template <typename Fn>
void for_all_subsets(const Group& g, Fn&& fn) {
  const auto n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) fn(GroupSubset::from_mask(g, mask));
}

}  // namespace

TEST_CASE("hfold_sumset examples") {
  const auto z7 = G("7");
  CHECK(hfold_sumset(S(z7, {1, 2, 3}), 2) == S(z7, {2, 3, 4, 5, 6}));
  for (const char* lit : {"7", "2,4", "3,3"}) {
    const auto g = G(lit);
    CHECK(hfold_sumset(S(g, {0}), 5) == S(g, {0}));
    const auto a = S(g, {1, 2});
    CHECK(hfold_sumset(a, 1) == a);
  }
  CHECK_THROWS_AS(hfold_sumset(GroupSubset(z7), 2), Error);
  try {
    hfold_sumset(S(z7, {1}), 0);
    FAIL("expected InvalidH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidH);
  }
  try {
    hfold_sumset(GroupSubset(z7), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySet);
  }
}

TEST_CASE("interval_sumset examples") {
  const auto z5 = G("5");
  CHECK(interval_sumset(S(z5, {0, 1}), 3) == S(z5, {0, 1, 2, 3}));
  CHECK(interval_sumset(S(z5, {0}), 4) == S(z5, {0}));
  CHECK(interval_sumset(S(z5, {2, 3}), 1) == S(z5, {0, 2, 3}));
  CHECK(interval_sumset(S(z5, {2, 3}), 0) == S(z5, {0}));
  try {
    interval_sumset(S(z5, {1}), -1);
    FAIL("expected InvalidS");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidS);
  }
  try {
    interval_sumset(GroupSubset(z5), 2);
    FAIL("expected EmptySet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySet);
  }
}

TEST_CASE("subset_sums examples") {
  const auto z5 = G("5");
  CHECK(subset_sums(S(z5, {1, 2})) == S(z5, {0, 1, 2, 3}));
  CHECK(subset_sums(GroupSubset(z5)) == S(z5, {0}));
  for (const auto& t : reference::all_types(2, 16)) {
    const Group g(t);
    CHECK(is_complete(subset_sums(GroupSubset::full(g))));
  }
}

TEST_CASE("is_complete") {
  for (const auto& t : reference::all_types(2, 20)) {
    const Group g(t);
    const auto full = GroupSubset::full(g);
    CHECK(is_complete(full));
    auto punctured = full;
    punctured.erase(0);
    CHECK(!is_complete(punctured));
    for (int h = 1; h <= 4; ++h) CHECK(is_complete(hfold_sumset(full, h)));
  }
}

TEST_CASE("engine matches elementwise reference on random sets") {
  std::mt19937_64 rng(99);
  for (const auto& t : reference::all_types(2, 40)) {
    const Group g(t);
    for (int trial = 0; trial < 4; ++trial) {
      auto a = reference::random_subset(g, rng, 0.1 + 0.1 * trial);
      if (a.empty()) a.insert(rng() % g.order());
      const auto b = reference::random_subset(g, rng, 0.2);
      const auto ra = reference::to_set(a);
      CHECK(reference::to_set(sumset(a, b)) == reference::pair_sums(t, ra, reference::to_set(b)));
      const int h = 1 + trial;
      CHECK(reference::to_set(hfold_sumset(a, h)) == reference::hfold(t, ra, h));
      CHECK(reference::to_set(interval_sumset(a, h)) == reference::interval(t, ra, h));
      if (a.size() <= 12) CHECK(reference::to_set(subset_sums(a)) == reference::subset_sums(t, ra));
      const auto x = static_cast<ElementIndex>(rng() % g.order());
      CHECK(reference::to_set(translate(a, x)) ==
            reference::pair_sums(t, ra, reference::ElementSet{g.decode(x).coords}));
    }
  }
}

TEST_CASE("engine matches reference on larger multiword groups") {
  std::mt19937_64 rng(1234);
  for (const char* lit : {"100", "130", "4,36", "2,2,2,2,2,2,2", "3,3,3,3,3", "7,49"}) {
    const auto t = GroupType::parse(lit);
    const Group g(t);
    auto a = reference::random_subset(g, rng, 0.05);
    a.insert(1);
    const auto ra = reference::to_set(a);
    CHECK(reference::to_set(hfold_sumset(a, 2)) == reference::hfold(t, ra, 2));
    CHECK(reference::to_set(interval_sumset(a, 2)) == reference::interval(t, ra, 2));
  }
}

TEST_CASE("monotonicity: A ⊆ A' implies hA ⊆ hA' and [0,s]A ⊆ [0,s]A'") {
  std::mt19937_64 rng(8);
  for (const auto& t : reference::all_types(2, 64)) {
    const Group g(t);
    for (int trial = 0; trial < 5; ++trial) {
      auto a = reference::random_subset(g, rng, 0.15);
      a.insert(rng() % g.order());
      auto bigger = a;
      bigger |= reference::random_subset(g, rng, 0.1);
      const int h = 1 + trial % 4;
      CHECK(hfold_sumset(a, h).is_subset_of(hfold_sumset(bigger, h)));
      CHECK(interval_sumset(a, h).is_subset_of(interval_sumset(bigger, h)));
    }
  }
}

TEST_CASE("translation: h(A+g) = hA + h*g, exhaustive over n <= 16 sampled sets") {
  std::mt19937_64 rng(31);
  for (const auto& t : reference::all_types(2, 16)) {
    const Group g(t);
    for (int trial = 0; trial < 12; ++trial) {
      auto a = reference::random_subset(g, rng, 0.3);
      a.insert(rng() % g.order());
      for (ElementIndex x = 0; x < g.order(); ++x) {
        for (int h = 1; h <= 4; ++h) {
          const auto shifted = hfold_sumset(translate(a, x), h);
          const auto base = hfold_sumset(a, h);
          CHECK(shifted.size() == base.size());
          CHECK(shifted == translate(base, g.scale(x, static_cast<std::uint64_t>(h))));
        }
      }
    }
  }
}

TEST_CASE("zero absorption: 0 ∈ A implies [0,s]A = sA, exhaustive n <= 12") {
  for (const auto& t : reference::all_types(2, 12)) {
    const Group g(t);
    for_all_subsets(g, [&](const GroupSubset& a) {
      if (!a.contains(0)) return;
      for (int s = 1; s <= 4; ++s) REQUIRE(interval_sumset(a, s) == hfold_sumset(a, s));
    });
  }
}

TEST_CASE("(h1+h2)A = h1A ⊕ h2A, exhaustive n <= 12") {
  for (const auto& t : reference::all_types(2, 12)) {
    const Group g(t);
    for_all_subsets(g, [&](const GroupSubset& a) {
      if (a.empty()) return;
      GroupSubset layers[4] = {a, hfold_sumset(a, 2), hfold_sumset(a, 3), hfold_sumset(a, 6)};
      for (int h1 = 1; h1 <= 3; ++h1) {
        for (int h2 = 1; h2 <= 3; ++h2) {
          const auto lhs = h1 + h2 == 6 ? layers[3] : hfold_sumset(a, h1 + h2);
          REQUIRE(lhs == sumset(layers[h1 - 1], layers[h2 - 1]));
        }
      }
    });
  }
}

TEST_CASE("hex serialization round-trips and has a fixed layout") {
  const auto z10 = G("10");
  const auto a = S(z10, {0, 5, 9});
  // nibbles: {0}->1, {5}->2 (index 5 = bit 1 of nibble 1), {9}->2 (bit 1 of nibble 2)
  CHECK(a.to_hex() == "122");
  CHECK(GroupSubset::from_hex(z10, "122") == a);
  CHECK_THROWS_AS(GroupSubset::from_hex(z10, "12"), Error);
  CHECK_THROWS_AS(GroupSubset::from_hex(z10, "12g"), Error);
  CHECK_THROWS_AS(GroupSubset::from_hex(z10, "128"), Error);  // index 11 is outside Z_10

  std::mt19937_64 rng(2);
  for (const char* lit : {"3", "64", "65", "2,2,2", "10,100"}) {
    const auto g = G(lit);
    for (int i = 0; i < 20; ++i) {
      const auto x = reference::random_subset(g, rng, 0.5);
      CHECK(GroupSubset::from_hex(g, x.to_hex()) == x);
    }
  }
}
