#pragma once

// Explicit extremal sets: generating sets of size v(n,h) with hA != G, and
// preimages of block sets in a quotient giving lower bounds on
// chi-hat(G,[0,s]). Every constructor checks its own output before returning.

#include <cstdint>
#include <string>
#include <vector>

#include "critnum/subset.hpp"

namespace critnum {

enum class WitnessMode { HFold, Interval };

struct WitnessCertificate {
  GroupType group;
  WitnessMode mode;
  int parameter;  // h for HFold, s for Interval
  GroupSubset set;
  std::int64_t claimed_size;
  bool generates;
  bool incomplete;
  /// How the set was built, e.g. "quotient(d0=2):prime".
  std::string branch;

  bool ok() const { return generates && incomplete && claimed_size == static_cast<std::int64_t>(set.size()); }
};

struct BoundCertificate {
  GroupType group;
  int s;
  std::vector<std::int64_t> quotient_type;  // (d_1, ..., d_t), empty when trivial
  std::vector<std::int64_t> c_vector;
  std::int64_t bound;
  GroupSubset witness;
  bool generates;
  bool incomplete;
  /// No feasible quotient; bound is the trivial 1 and the witness is empty.
  bool trivial;

  std::int64_t index_d() const;
  bool ok() const {
    if (trivial) return bound == 1 && witness.empty();
    return generates && incomplete && bound == static_cast<std::int64_t>(witness.size()) + 1;
  }
};

/// Generating A with |A| = v(n,h) and hA != G. Throws
/// ConstructionInvariantViolated if any internal check fails.
WitnessCertificate witness_chi_hat_h(const GroupType& g, int h);

/// True when (d_1 | ... | d_t) is realizable as a quotient of g:
/// t <= r and d_i | n_{r-t+i}.
bool quotient_type_feasible(const GroupType& g, const std::vector<std::int64_t>& quotient_type);

/// Sum over i of ceil((d_i - 1) / c_i).
std::int64_t block_reach(const std::vector<std::int64_t>& quotient_type,
                         const std::vector<std::int64_t>& c_vector);

/// The lifted block set for one quotient/c configuration. Throws
/// QuotientUnavailable or ConditionViolated on bad input.
BoundCertificate witness_prop_bound(const GroupType& g, const std::vector<std::int64_t>& quotient_type,
                                    const std::vector<std::int64_t>& c_vector, int s);

/// Best bound over every feasible quotient type and c-vector; ties go to the
/// smallest index d, then the lexicographically smallest c, then the
/// lexicographically smallest quotient type.
BoundCertificate prop_bound_search(const GroupType& g, int s);

/// All divisor chains (d_1 | ... | d_t), d_i >= 2, realizable as quotients of g.
std::vector<std::vector<std::int64_t>> feasible_quotient_types(const GroupType& g);

}  // namespace critnum
