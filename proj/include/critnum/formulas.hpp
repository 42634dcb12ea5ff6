#pragma once

// Closed-form critical numbers. Integer arithmetic only.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critnum/group.hpp"

namespace critnum {

enum class CriticalTag { ChiH, ChiInterval, ChiHatH, ChiHatInterval, Cr, CrStar };

/// One of the six critical quantities with its h or s where applicable.
struct CriticalKind {
  CriticalTag tag;
  int parameter = 0;

  static CriticalKind chi_h(int h);
  static CriticalKind chi_interval(int s);
  static CriticalKind chi_hat_h(int h);
  static CriticalKind chi_hat_interval(int s);
  static CriticalKind cr();
  static CriticalKind cr_star();

  bool restricts_to_generating() const {
    return tag == CriticalTag::ChiHatH || tag == CriticalTag::ChiHatInterval;
  }
  bool uses_hfold() const { return tag == CriticalTag::ChiH || tag == CriticalTag::ChiHatH; }
  bool uses_interval() const {
    return tag == CriticalTag::ChiInterval || tag == CriticalTag::ChiHatInterval;
  }
  bool uses_subset_sums() const { return tag == CriticalTag::Cr || tag == CriticalTag::CrStar; }

  std::string to_string() const;
  friend bool operator==(const CriticalKind&, const CriticalKind&) = default;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t isqrt(std::int64_t n);

/// (floor((d-2)/h) + 1) * n/d, with floor toward -infinity so f_1 = 0.
/// Throws InvalidDivisor if d does not divide n, InvalidH for h < 1.
std::int64_t f_d(std::int64_t n, std::int64_t d, std::int64_t h);

struct VResult {
  std::int64_t value;
  std::vector<std::int64_t> maximizers;  // ascending divisors attaining the max
};

/// max f_d(n,h) over all divisors d of n. Throws InvalidOrder for n < 2.
VResult v_detail(std::int64_t n, std::int64_t h);
std::int64_t v(std::int64_t n, std::int64_t h);

std::int64_t chi_h(std::int64_t n, std::int64_t h);
std::int64_t chi_interval(std::int64_t n, std::int64_t s);
/// Equal to chi_h for every group and h.
std::int64_t chi_hat_h(std::int64_t n, std::int64_t h);

struct CrPair {
  std::int64_t cr_star;
  std::int64_t cr;
  bool sqrt_branch;  // floor(2 sqrt(n-2)) branch taken
};

/// cr* and cr for n >= 10. Throws OutsideTheoremDomain below that.
CrPair cr_pair(const GroupType& g);

struct Interval3Result {
  std::int64_t value;
  std::optional<std::int64_t> subgroup_order;  // the minimal qualifying m, if any
};

/// Whether G has a subgroup of order m that is not an elementary abelian
/// 2-group (m | n assumed).
bool has_non_elementary2_subgroup_of_order(const GroupType& g, std::int64_t m);

/// chi-hat(G,[0,3]) for G not elementary abelian 2, n >= 5.
/// Throws WrongGroupClass / OutsideValidatedDomain.
Interval3Result chi_hat_interval3_detail(const GroupType& g);
std::int64_t chi_hat_interval3(const GroupType& g);
/// The same expression without the n >= 5 guard, for reporting the small
/// orders it gets wrong. Still throws WrongGroupClass.
Interval3Result chi_hat_interval3_unguarded(const GroupType& g);

/// chi-hat(Z_n,[0,s]).
std::int64_t chi_hat_cyclic(std::int64_t n, std::int64_t s);

/// chi-hat(Z_2^r,[0,s]) for s >= 2. Throws OutsideTheoremDomain for s < 2.
std::int64_t chi_hat_2group(std::int64_t r, std::int64_t s);

/// Maximum size of a sum-free subset of Z_n by the piecewise smallest-prime rule.
std::int64_t sumfree_bound(std::int64_t n);

}  // namespace critnum
