#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critnum/group.hpp"

namespace critnum {

/// A ⊆ G as a dense bit vector over element indices.
///
/// Bits past the group order are always zero; `size()` is kept in sync with
/// every mutation.
class GroupSubset {
 public:
  explicit GroupSubset(Group group);

  static GroupSubset full(Group group);
  static GroupSubset singleton(Group group, ElementIndex a);
  static GroupSubset from_indices(Group group, std::span<const ElementIndex> indices);
  static GroupSubset from_indices(Group group, std::initializer_list<ElementIndex> indices);
  static GroupSubset from_elements(Group group, std::span<const Element> elements);
  /// Bit i of `mask` selects element index i. Requires order <= 64.
  static GroupSubset from_mask(Group group, std::uint64_t mask);
  /// Takes ownership of raw words; trailing bits beyond the order are cleared.
  static GroupSubset from_words(Group group, std::vector<std::uint64_t> words);

  const Group& group() const { return group_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(ElementIndex a) const;
  void insert(ElementIndex a);
  void erase(ElementIndex a);

  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<ElementIndex> indices() const;
  std::vector<Element> elements() const;

  /// Low 64 bits; exact when order <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  bool is_subset_of(const GroupSubset& other) const;
  GroupSubset& operator|=(const GroupSubset& other);

  /// Lowercase hex, one nibble per 4 elements: character k holds indices
  /// 4k..4k+3 with index 4k in the nibble's least significant bit.
  std::string to_hex() const;
  static GroupSubset from_hex(Group group, std::string_view hex);

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }

 private:
  void check_same_group(const GroupSubset& other) const;
  void recount();

  Group group_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;

  friend class SubsetBuilder;
};

/// Mutable word access for the sumset engine; recounts on `finish()`.
class SubsetBuilder {
 public:
  explicit SubsetBuilder(Group group) : subset_(std::move(group)) {}
  std::span<std::uint64_t> words() { return subset_.words_; }
  GroupSubset finish() &&;

 private:
  GroupSubset subset_;
};

/// Elements of `b` in the quotient lifted to their full preimage in the
/// parent: |result| = |b| * n / d. Throws SpecMismatch on mismatched groups.
GroupSubset lift_preimage(const QuotientSpec& spec, const Group& parent, const GroupSubset& b);

/// Closure of A ∪ {0} under addition and negation.
GroupSubset subgroup_generated(const GroupSubset& a);
bool is_generating(const GroupSubset& a);

}  // namespace critnum
