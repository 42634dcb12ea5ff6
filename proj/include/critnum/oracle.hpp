#pragma once

// Exhaustive ground truth for every critical quantity. Deliberately literal:
// it enumerates subsets and evaluates the definitions, sharing nothing with
// the closed forms.

#include <cstdint>
#include <optional>
#include <vector>

#include "critnum/formulas.hpp"
#include "critnum/subset.hpp"

namespace critnum {

struct OracleBudget {
  /// Largest group order the oracle will touch.
  std::uint64_t max_n = 20;

  static constexpr std::uint64_t kSweepDefault = 16;
  static constexpr std::uint64_t kSingleDefault = 20;
  /// Hard ceiling: candidates are 64-bit masks.
  static constexpr std::uint64_t kHardCap = 40;

  /// Default for a single query or a sweep, or `requested` when nonzero;
  /// either way lowered by CRITNUM_MAX_N when set.
  static OracleBudget from_env(bool sweep, std::uint64_t requested = 0);
};

struct OracleQuery {
  GroupType group;
  CriticalKind kind;
  /// Only generating sets count. Implied by the chi-hat kinds.
  bool restrict_generating = false;
  /// Candidates come from G \ {0}. Implied by cr*.
  bool exclude_zero = false;
  /// Only sets containing 0 are enumerated; valid for the unrestricted
  /// h-fold and interval kinds, whose incompleteness is translation invariant.
  bool translation_reduced = false;
};

struct OracleOptions {
  unsigned workers = 1;
  OracleBudget budget{};
};

struct OracleResult {
  std::int64_t value;
  /// A largest qualifying incomplete set, lowest rank among those found;
  /// absent when value == 1 and no qualifying incomplete set exists.
  std::optional<GroupSubset> extremal;
  std::uint64_t candidates_checked = 0;
};

/// 1 + max{|A| : A qualifies and is incomplete}, or 1 if no such A exists.
OracleResult brute_critical(const OracleQuery& q, const OracleOptions& options = {});

std::int64_t brute_cr(const GroupType& g, const OracleOptions& options = {});
std::int64_t brute_cr_star(const GroupType& g, const OracleOptions& options = {});

/// Largest A ⊆ Z_n with A ∩ 2A = ∅ (branch and bound).
std::int64_t brute_max_sumfree(std::int64_t n, const OracleOptions& options = {});

/// Every subgroup of G as a subset, sorted by (size, mask). n <= 16.
std::vector<GroupSubset> enumerate_subgroups(const GroupType& g, const OracleOptions& options = {});

/// Whether `a` is incomplete for `kind` (hA, [0,s]A or ΣA differs from G).
bool is_incomplete_for(const GroupSubset& a, const CriticalKind& kind);

// Combination indexing in colex order, exposed for the partitioning tests.
std::uint64_t binomial(unsigned n, unsigned k);
/// The k-subset of {0..m-1} with colex rank `rank`, as a bit mask.
std::uint64_t unrank_combination(std::uint64_t rank, unsigned m, unsigned k);
/// Next mask with the same popcount in increasing numeric (colex) order.
std::uint64_t next_combination(std::uint64_t mask);

}  // namespace critnum
