#include <deque>

#include "critnum/error.hpp"
#include "critnum/subset.hpp"

namespace critnum {

GroupSubset lift_preimage(const QuotientSpec& spec, const Group& parent, const GroupSubset& b) {
  if (!(parent.type() == spec.parent)) {
    fail(ErrorCode::SpecMismatch, "parent group " + parent.type().to_string() +
                                      " does not match quotient spec parent " + spec.parent.to_string());
  }
  if (!(b.group().type() == spec.quotient)) {
    fail(ErrorCode::SpecMismatch, "subset lives in " + b.group().type().to_string() +
                                      ", quotient is " + spec.quotient.to_string());
  }
  const Group& quotient = b.group();
  GroupSubset out(parent);
  for (ElementIndex i = 0; i < parent.order(); ++i) {
    ElementIndex image = 0;
    for (std::size_t k = 0; k < spec.kept_axes.size(); ++k) {
      const auto axis = spec.kept_axes[k];
      image += (parent.coordinate(i, axis) % spec.divisor_vector[axis]) * quotient.stride(k);
    }
    if (b.contains(image)) out.insert(i);
  }
  return out;
}

GroupSubset subgroup_generated(const GroupSubset& a) {
  const Group& g = a.group();
  std::vector<ElementIndex> generators;
  for (auto x : a.indices()) {
    if (x == 0) continue;
    generators.push_back(x);
    const auto minus = g.neg(x);
    if (minus != x) generators.push_back(minus);
  }
  GroupSubset closure = GroupSubset::singleton(g, 0);
  std::deque<ElementIndex> frontier{0};
  while (!frontier.empty()) {
    const auto x = frontier.front();
    frontier.pop_front();
    for (auto gen : generators) {
      const auto y = g.add(x, gen);
      if (!closure.contains(y)) {
        closure.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return closure;
}

bool is_generating(const GroupSubset& a) { return subgroup_generated(a).size() == a.group().order(); }

}  // namespace critnum
