#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critnum/error.hpp"
#include "critnum/formulas.hpp"
#include "reference.hpp"

using namespace critnum;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected critnum::Error");
  return ErrorCode::ParseError;
}

GroupType T(const char* lit) { return GroupType::parse(lit); }

}  // namespace

TEST_CASE("floor division rounds toward negative infinity") {
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_div(-3, 3) == -1);
  CHECK(floor_div(-4, 3) == -2);
  CHECK(floor_div(7, 2) == 3);
  CHECK(isqrt(36) == 6);
  CHECK(isqrt(35) == 5);
}

TEST_CASE("f_d") {
  CHECK(f_d(10, 10, 2) == 5);
  CHECK(f_d(10, 5, 3) == 4);
  for (std::int64_t n = 1; n <= 50; ++n)
    for (std::int64_t h = 1; h <= 8; ++h) CHECK(f_d(n, 1, h) == 0);
  CHECK(code_of([] { f_d(10, 3, 2); }) == ErrorCode::InvalidDivisor);
  CHECK(code_of([] { f_d(10, 5, 0); }) == ErrorCode::InvalidH);
}

TEST_CASE("v and the chi quantities") {
  CHECK(v(10, 2) == 5);
  CHECK(chi_h(10, 2) == 6);
  CHECK(chi_interval(10, 2) == 6);
  CHECK(v(7, 2) == 3);
  CHECK(chi_h(8, 2) == 5);
  const auto d8 = v_detail(8, 2);
  CHECK(d8.maximizers == std::vector<std::int64_t>{2, 4, 8});
  CHECK(chi_hat_h(7, 2) == 4);
  CHECK(chi_hat_h(8, 3) == 5);
  CHECK(v_detail(8, 3).maximizers == std::vector<std::int64_t>{2});
  for (std::int64_t n = 2; n <= 200; ++n) {
    CHECK(v(n, 1) == n - 1);
    CHECK(chi_hat_h(n, 1) == n);
    CHECK(chi_h(n, 2) == n / 2 + 1);
    for (std::int64_t h = 1; h <= 8; ++h) {
      CHECK(v(n, h) >= floor_div(n - 2, h) + 1);
      CHECK(chi_hat_h(n, h) == chi_h(n, h));
      CHECK(chi_interval(n, h) == chi_h(n, h));
    }
  }
  CHECK(code_of([] { v(1, 2); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { chi_h(0, 2); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("cr_pair") {
  const auto z11 = cr_pair(T("11"));
  CHECK(z11.cr_star == 6);
  CHECK(z11.cr == 7);
  CHECK(z11.sqrt_branch);
  const auto z15 = cr_pair(T("15"));
  CHECK(z15.cr_star == 7);
  CHECK(z15.sqrt_branch);
  // The sqrt value coincides with n/p + p - 1 on the pq branch.
  CHECK(z15.cr_star == 15 / 3 + 3 - 1);
  const auto e16 = cr_pair(T("2,2,2,2"));
  CHECK(e16.cr_star == 8);
  CHECK(e16.cr == 9);
  CHECK(!e16.sqrt_branch);
  CHECK(!cr_pair(T("10")).sqrt_branch);  // p = 2 < 3
  CHECK(cr_pair(T("10")).cr_star == 5);
  CHECK(!cr_pair(T("3,9")).sqrt_branch);
  CHECK(cr_pair(T("25")).sqrt_branch);
  CHECK(!cr_pair(T("5,5")).sqrt_branch);
  CHECK(!cr_pair(T("33")).sqrt_branch);  // q = 11 > 3 + 1 + 1
  CHECK(code_of([] { cr_pair(T("9")); }) == ErrorCode::OutsideTheoremDomain);
}

TEST_CASE("subgroup criterion for the [0,3] formula") {
  CHECK(has_non_elementary2_subgroup_of_order(T("2,4"), 8));
  CHECK(!has_non_elementary2_subgroup_of_order(T("2,4"), 2));
  CHECK(has_non_elementary2_subgroup_of_order(T("2,4"), 4));
  CHECK(!has_non_elementary2_subgroup_of_order(T("2,2,2,2"), 8));
  CHECK(has_non_elementary2_subgroup_of_order(T("2,2,4"), 8));
  CHECK(has_non_elementary2_subgroup_of_order(T("2,10"), 20));
  CHECK(!has_non_elementary2_subgroup_of_order(T("10"), 3));
}

TEST_CASE("chi_hat_interval3") {
  CHECK(chi_hat_interval3(T("5")) == 3);
  CHECK(chi_hat_interval3(T("9")) == 4);
  CHECK(chi_hat_interval3(T("2,4")) == 4);
  CHECK(chi_hat_interval3_detail(T("2,4")).subgroup_order == 8);
  CHECK(chi_hat_interval3(T("10")) == 5);
  CHECK(!chi_hat_interval3_detail(T("9")).subgroup_order.has_value());
  CHECK(code_of([] { chi_hat_interval3(T("2,2,2")); }) == ErrorCode::WrongGroupClass);
  CHECK(code_of([] { chi_hat_interval3(T("4")); }) == ErrorCode::OutsideValidatedDomain);
  CHECK(code_of([] { chi_hat_interval3(T("3")); }) == ErrorCode::OutsideValidatedDomain);
  CHECK(chi_hat_interval3_unguarded(T("3")).value == 2);
  CHECK(chi_hat_interval3_unguarded(T("4")).value == 2);
  CHECK(code_of([] { chi_hat_interval3(T("2,2")); }) == ErrorCode::WrongGroupClass);
}

TEST_CASE("chi_hat_cyclic") {
  CHECK(chi_hat_cyclic(4, 3) == 1);
  CHECK(chi_hat_cyclic(10, 3) == 5);
  CHECK(chi_hat_cyclic(5, 3) == 3);
  for (std::int64_t n = 2; n <= 200; ++n)
    for (std::int64_t s = 1; s <= 6; ++s) CHECK(chi_hat_cyclic(n, s) <= chi_interval(n, s));
}

TEST_CASE("chi_hat_interval3 agrees with chi_hat_cyclic on cyclic groups") {
  for (std::uint64_t n = 5; n <= 200; ++n) CHECK(chi_hat_interval3(GroupType::cyclic(n)) == chi_hat_cyclic(n, 3));
}

TEST_CASE("chi_hat_2group") {
  CHECK(chi_hat_2group(4, 2) == 9);
  CHECK(chi_hat_2group(2, 3) == 1);
  CHECK(chi_hat_2group(3, 2) == 5);
  CHECK(code_of([] { chi_hat_2group(3, 1); }) == ErrorCode::OutsideTheoremDomain);
}

TEST_CASE("sumfree_bound") {
  CHECK(sumfree_bound(10) == 5);
  CHECK(sumfree_bound(9) == 3);
  CHECK(sumfree_bound(2) == 1);
  CHECK(sumfree_bound(7) == 2);
  CHECK(sumfree_bound(35) == 14);  // smallest prime = 2 mod 3 is 5
  CHECK(sumfree_bound(49) == 16);
}

TEST_CASE("sumfree_bound equals v(n,3) for n <= 10^4") {
  for (std::int64_t n = 2; n <= 10000; ++n) REQUIRE(sumfree_bound(n) == v(n, 3));
}
