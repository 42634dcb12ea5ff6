#pragma once

#include "critnum/subset.hpp"

namespace critnum {

/// B + a.
GroupSubset translate(const GroupSubset& b, ElementIndex a);

/// Pairwise sumset A ⊕ B = {a + b}. Either side may be empty.
GroupSubset sumset(const GroupSubset& a, const GroupSubset& b);

/// hA, the sums of h not-necessarily-distinct elements of A, by h - 1 pairwise
/// folds. Throws EmptySet for empty A and InvalidH for h <= 0.
GroupSubset hfold_sumset(const GroupSubset& a, int h);

/// [0,s]A = {0} ∪ A ∪ 2A ∪ ... ∪ sA. Throws EmptySet / InvalidS (s < 0).
GroupSubset interval_sumset(const GroupSubset& a, int s);

/// ΣA, sums over all subsets of A (the empty subset contributes 0).
GroupSubset subset_sums(const GroupSubset& a);

bool is_complete(const GroupSubset& s);

}  // namespace critnum
