#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "critnum/error.hpp"
#include "critnum/formulas.hpp"
#include "critnum/oracle.hpp"
#include "critnum/sumset.hpp"
#include "reference.hpp"

using namespace critnum;

namespace {

GroupType T(const char* lit) { return GroupType::parse(lit); }

std::int64_t brute(const GroupType& g, CriticalKind kind, unsigned workers = 1) {
  OracleOptions opt;
  opt.workers = workers;
  return brute_critical({g, kind}, opt).value;
}

}  // namespace

TEST_CASE("brute_critical examples") {
  CHECK(brute(T("10"), CriticalKind::chi_h(2)) == 6);
  CHECK(brute(T("5"), CriticalKind::chi_hat_interval(3)) == 3);
  const auto z5 = brute_critical({T("5"), CriticalKind::chi_hat_interval(3)});
  REQUIRE(z5.extremal.has_value());
  CHECK(z5.extremal->size() == 2);
  CHECK(is_generating(*z5.extremal));

  // Z_2^2 with h = 1: every generating set misses some element except G itself.
  const auto k4 = brute_critical({T("2,2"), CriticalKind::chi_hat_h(1)});
  MESSAGE("chi-hat(Z2^2, 1) by brute force = " << k4.value);
  CHECK(k4.value == 4);
}

TEST_CASE("brute subset-sum quantities") {
  CHECK(brute_cr_star(T("11")) == 6);
  CHECK(brute_cr(T("11")) == 7);
  CHECK(brute_cr_star(T("15")) == 7);
  CHECK(brute_cr_star(T("2,2,2,2")) == 8);
}

TEST_CASE("brute_max_sumfree") {
  CHECK(brute_max_sumfree(10) == 5);
  CHECK(brute_max_sumfree(9) == 3);
  CHECK(brute_max_sumfree(2) == 1);
  CHECK_THROWS_AS(brute_max_sumfree(1), Error);
}

TEST_CASE("brute_max_sumfree matches an exhaustive mask scan, n <= 14") {
  for (unsigned n = 2; n <= 14; ++n) {
    int best = 0;
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a) {
      bool free = true;
      for (unsigned x = 0; x < n && free; ++x) {
        if (!((a >> x) & 1U)) continue;
        for (unsigned y = x; y < n && free; ++y)
          if (((a >> y) & 1U) && ((a >> ((x + y) % n)) & 1U)) free = false;
      }
      if (free) best = std::max(best, std::popcount(a));
    }
    CHECK(brute_max_sumfree(n) == best);
  }
}

TEST_CASE("enumerate_subgroups") {
  const auto z6 = enumerate_subgroups(T("6"));
  REQUIRE(z6.size() == 4);
  CHECK(z6[0].size() == 1);
  CHECK(z6[1].size() == 2);
  CHECK(z6[2].size() == 3);
  CHECK(z6[3].size() == 6);
  CHECK(enumerate_subgroups(T("2,2")).size() == 5);
  CHECK(enumerate_subgroups(T("2,2,2")).size() == 16);

  for (const auto& t : reference::all_types(2, 16)) {
    const auto subs = enumerate_subgroups(t);
    std::set<std::uint64_t> orders;
    for (const auto& h : subs) {
      CHECK(subgroup_generated(h) == h);
      orders.insert(h.size());
    }
    const auto divs = divisors(static_cast<std::int64_t>(t.order()));
    CHECK(orders == std::set<std::uint64_t>(divs.begin(), divs.end()));
  }
}

TEST_CASE("the subgroup criterion agrees with enumerated subgroups, n <= 16") {
  for (const auto& t : reference::all_types(2, 16)) {
    const auto subs = enumerate_subgroups(t);
    for (auto m : divisors(static_cast<std::int64_t>(t.order()))) {
      bool found = false;
      for (const auto& h : subs) {
        if (h.size() != m) continue;
        const Group g(t);
        bool elementary2 = true;
        for (auto x : h.indices())
          if (g.add(x, x) != 0) elementary2 = false;
        if (!elementary2) found = true;
      }
      CHECK(has_non_elementary2_subgroup_of_order(t, static_cast<std::int64_t>(m)) == found);
    }
  }
}

TEST_CASE("colex unranking and successor agree") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(40, 20) == 137846528820ULL);
  for (unsigned m : {1U, 5U, 9U, 16U}) {
    for (unsigned k = 1; k <= m; ++k) {
      const auto total = binomial(m, k);
      std::uint64_t mask = unrank_combination(0, m, k);
      CHECK(mask == (std::uint64_t{1} << k) - 1);
      for (std::uint64_t r = 0; r < total; ++r) {
        REQUIRE(mask == unrank_combination(r, m, k));
        REQUIRE(std::popcount(mask) == static_cast<int>(k));
        REQUIRE(mask < (std::uint64_t{1} << m));
        mask = next_combination(mask);
      }
    }
  }
}

TEST_CASE("worker count does not change the result") {
  const std::vector<std::pair<GroupType, CriticalKind>> queries{
      {T("12"), CriticalKind::chi_h(3)},         {T("2,6"), CriticalKind::chi_hat_h(2)},
      {T("14"), CriticalKind::chi_hat_interval(2)}, {T("2,2,4"), CriticalKind::chi_interval(2)},
      {T("13"), CriticalKind::cr_star()},
  };
  for (const auto& [g, kind] : queries) {
    OracleOptions one;
    const auto base = brute_critical({g, kind}, one);
    for (unsigned w : {2U, 3U, 7U}) {
      OracleOptions many;
      many.workers = w;
      const auto other = brute_critical({g, kind}, many);
      CHECK(other.value == base.value);
      REQUIRE(other.extremal.has_value() == base.extremal.has_value());
      if (base.extremal) CHECK(*other.extremal == *base.extremal);
    }
  }
}

TEST_CASE("translation-reduced search agrees with the full search, n <= 12") {
  for (const auto& t : reference::all_types(2, 12)) {
    for (int h = 1; h <= 4; ++h) {
      for (auto kind : {CriticalKind::chi_h(h), CriticalKind::chi_interval(h)}) {
        const auto full = brute_critical({t, kind}).value;
        OracleQuery reduced{t, kind};
        reduced.translation_reduced = true;
        CHECK(brute_critical(reduced).value == full);
      }
    }
  }
  OracleQuery bad{T("7"), CriticalKind::chi_hat_h(2)};
  bad.translation_reduced = true;
  CHECK_THROWS_AS(brute_critical(bad), Error);
}

TEST_CASE("incompleteness is downward closed on the extremal sets found") {
  std::mt19937_64 rng(4);
  for (const auto& t : reference::all_types(4, 14)) {
    for (auto kind : {CriticalKind::chi_h(2), CriticalKind::chi_interval(2), CriticalKind::chi_h(3)}) {
      const auto r = brute_critical({t, kind});
      if (!r.extremal) continue;
      const auto members = r.extremal->indices();
      for (int trial = 0; trial < 20; ++trial) {
        GroupSubset sub(r.extremal->group());
        for (auto x : members)
          if (rng() % 2) sub.insert(x);
        if (sub.empty()) continue;
        CHECK(is_incomplete_for(sub, kind));
      }
    }
  }
}

TEST_CASE("budget enforcement") {
  OracleOptions tight;
  tight.budget.max_n = 8;
  try {
    brute_critical({T("10"), CriticalKind::chi_h(2)}, tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  OracleOptions huge;
  huge.budget.max_n = 1000;
  CHECK_THROWS_AS(brute_critical({T("2,2,2,2,2,2"), CriticalKind::chi_h(2)}, huge), Error);
  CHECK_THROWS_AS(brute_max_sumfree(41, huge), Error);
  CHECK(OracleBudget::from_env(true).max_n <= OracleBudget::kSweepDefault);
  CHECK(OracleBudget::from_env(false).max_n <= OracleBudget::kSingleDefault);
}
