#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critnum {

/// Dense position of an element, mixed radix with the first coordinate least
/// significant.
using ElementIndex = std::uint64_t;

/// Invariant-factor type (n_1 | n_2 | ... | n_r) of a finite abelian group.
///
/// Every constructor normalizes its input, so two values compare equal exactly
/// when the groups they describe are isomorphic.
class GroupType {
 public:
  static GroupType from_factors(std::span<const std::uint64_t> factors);
  static GroupType cyclic(std::uint64_t n);
  /// Parses "n" or "a,b,c" (auto-normalized). Throws ParseError / InvalidFactor.
  static GroupType parse(std::string_view literal);

  const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }
  std::uint64_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t exponent() const { return factors_.back(); }

  bool is_cyclic() const { return factors_.size() == 1; }
  bool is_elementary_abelian_2() const;

  /// Comma-separated invariant factors, e.g. "2,2,4".
  std::string to_string() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;
  friend auto operator<=>(const GroupType& a, const GroupType& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  explicit GroupType(std::vector<std::uint64_t> factors);

  std::vector<std::uint64_t> factors_;
  std::uint64_t order_ = 1;
};

/// Canonical invariant-factor form of Z_{f_1} x ... x Z_{f_k}. Throws
/// InvalidFactor when some f_i <= 1 or the list is empty.
GroupType normalize_type(std::span<const std::uint64_t> factors);

/// Ascending positive divisors of n. Throws InvalidOrder for n <= 0.
std::vector<std::uint64_t> divisors(std::int64_t n);

/// Prime factorization as (p, exponent) pairs with p ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// All isomorphism types of abelian groups of order n (n >= 2), sorted by
/// their invariant-factor lists.
std::vector<GroupType> types_of_order(std::uint64_t n);

struct Element {
  std::vector<std::uint64_t> coords;

  friend bool operator==(const Element&, const Element&) = default;
};

/// A concrete group: its type plus the precomputed layout used by the bit-set
/// kernels. Cheap to copy; the payload is shared and immutable.
class Group {
 public:
  explicit Group(GroupType type);

  const GroupType& type() const;
  std::uint64_t order() const { return type().order(); }
  std::size_t rank() const { return type().rank(); }

  ElementIndex encode(const Element& a) const;
  Element decode(ElementIndex index) const;
  std::uint64_t coordinate(ElementIndex index, std::size_t axis) const;
  /// Weight of one unit step along `axis` in the dense index.
  std::uint64_t stride(std::size_t axis) const;

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  ElementIndex add(ElementIndex a, ElementIndex b) const;
  ElementIndex neg(ElementIndex a) const;
  /// k * a for k >= 0.
  ElementIndex scale(ElementIndex a, std::uint64_t k) const;

  std::vector<Element> elements() const;

  /// Words needed for a bit-vector over the group.
  std::size_t word_count() const;

  /// Bit masks used to translate along a non-final axis by t (0 < t < n_axis):
  /// `low` selects elements whose coordinate is < n_axis - t, `high` the rest.
  std::span<const std::uint64_t> axis_low_mask(std::size_t axis, std::uint64_t t) const;
  std::span<const std::uint64_t> axis_high_mask(std::size_t axis, std::uint64_t t) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.impl_ == b.impl_ || a.type() == b.type();
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;

  void check(const Element& a) const;
};

/// Coordinate-wise reduction G -> prod Z_{e_i}; its kernel is the subgroup H.
struct QuotientSpec {
  GroupType parent;
  std::vector<std::uint64_t> divisor_vector;
  GroupType quotient;
  std::uint64_t index_d;
  /// Parent axes that survive in the quotient (those with e_i > 1), ascending.
  std::vector<std::size_t> kept_axes;
};

/// Quotient of index d built greedily from the last invariant factor down:
/// e_i = gcd(n_i, remaining d). Throws InvalidIndex unless d > 1 and d | n.
QuotientSpec quotient_spec(const GroupType& g, std::uint64_t d);

/// Quotient for an explicit divisor vector. The entries > 1 must already form
/// a divisor chain so the reduced coordinates are the quotient's coordinates.
QuotientSpec quotient_from_divisors(const GroupType& g, std::vector<std::uint64_t> e);

Element project(const QuotientSpec& spec, const Element& a);

}  // namespace critnum
