#include "critnum/group.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

#include "critnum/error.hpp"

namespace critnum {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::uint64_t bits) { return (bits + kWordBits - 1) / kWordBits; }

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Integer partitions of `total` into parts of size <= `max_part`, parts non-increasing.
void partitions(unsigned total, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(total, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(total - part, part, current, out);
    current.pop_back();
  }
}

// Builds the invariant factors from per-prime exponent lists (any order).
std::vector<std::uint64_t> assemble(std::map<std::uint64_t, std::vector<unsigned>> by_prime) {
  std::size_t rank = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    rank = std::max(rank, exps.size());
  }
  // Position rank-1 receives the largest power of each prime.
  std::vector<std::uint64_t> factors(rank, 1);
  for (const auto& [p, exps] : by_prime) {
    for (std::size_t j = 0; j < exps.size(); ++j) factors[rank - 1 - j] *= ipow(p, exps[j]);
  }
  return factors;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupType

GroupType::GroupType(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  for (auto f : factors_) order_ *= f;
}

GroupType GroupType::from_factors(std::span<const std::uint64_t> factors) {
  if (factors.empty()) fail(ErrorCode::InvalidFactor, "a group type needs at least one factor");
  std::map<std::uint64_t, std::vector<unsigned>> by_prime;
  for (auto f : factors) {
    if (f <= 1) fail(ErrorCode::InvalidFactor, "factor " + std::to_string(f) + " must be >= 2");
    for (auto [p, e] : factorize(f)) by_prime[p].push_back(e);
  }
  return GroupType(assemble(std::move(by_prime)));
}

GroupType GroupType::cyclic(std::uint64_t n) {
  const std::uint64_t f[] = {n};
  return from_factors(f);
}

GroupType GroupType::parse(std::string_view literal) {
  std::vector<std::uint64_t> factors;
  std::size_t pos = 0;
  while (true) {
    while (pos < literal.size() && literal[pos] == ' ') ++pos;
    std::uint64_t value = 0;
    const char* first = literal.data() + pos;
    const char* last = literal.data() + literal.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) {
      fail(ErrorCode::ParseError, "group literal '" + std::string(literal) +
                                      "': expected integer at position " + std::to_string(pos));
    }
    factors.push_back(value);
    pos = static_cast<std::size_t>(ptr - literal.data());
    while (pos < literal.size() && literal[pos] == ' ') ++pos;
    if (pos == literal.size()) break;
    if (literal[pos] != ',') {
      fail(ErrorCode::ParseError, "group literal '" + std::string(literal) +
                                      "': unexpected character at position " + std::to_string(pos));
    }
    ++pos;
  }
  if (factors.size() == 1 && factors[0] < 2) {
    fail(ErrorCode::InvalidOrder, "cyclic group literal '" + std::string(literal) + "': order must be >= 2");
  }
  return from_factors(factors);
}

bool GroupType::is_elementary_abelian_2() const {
  return std::all_of(factors_.begin(), factors_.end(), [](auto f) { return f == 2; });
}

std::string GroupType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors_[i]);
  }
  return out;
}

GroupType normalize_type(std::span<const std::uint64_t> factors) {
  return GroupType::from_factors(factors);
}

std::vector<std::uint64_t> divisors(std::int64_t n) {
  if (n <= 0) fail(ErrorCode::InvalidOrder, "divisors: n = " + std::to_string(n) + " must be >= 1");
  std::vector<std::uint64_t> small, large;
  const auto u = static_cast<std::uint64_t>(n);
  for (std::uint64_t d = 1; d * d <= u; ++d) {
    if (u % d != 0) continue;
    small.push_back(d);
    if (d != u / d) large.push_back(u / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<GroupType> types_of_order(std::uint64_t n) {
  if (n < 2) fail(ErrorCode::InvalidOrder, "types_of_order: n = " + std::to_string(n) + " must be >= 2");
  const auto primes = factorize(n);
  std::vector<std::vector<std::vector<unsigned>>> options;
  for (auto [p, e] : primes) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    options.push_back(std::move(parts));
  }
  std::vector<GroupType> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    std::map<std::uint64_t, std::vector<unsigned>> by_prime;
    for (std::size_t i = 0; i < primes.size(); ++i) by_prime[primes[i].first] = options[i][pick[i]];
    auto factors = assemble(std::move(by_prime));
    out.push_back(GroupType::from_factors(factors));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Group

struct Group::Impl {
  GroupType type;
  std::vector<std::uint64_t> strides;
  std::size_t words = 0;
  // masks[axis] holds 2 * (n_axis - 1) blocks of `words` words: low, high for t = 1..n_axis-1.
  std::vector<std::vector<std::uint64_t>> masks;

  explicit Impl(GroupType t) : type(std::move(t)) {
    const auto& f = type.invariant_factors();
    strides.resize(f.size());
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      strides[i] = s;
      s *= f[i];
    }
    words = words_for(type.order());
    masks.resize(f.size());
    // The final axis translates by a plain rotation and needs no masks.
    for (std::size_t axis = 0; axis + 1 < f.size(); ++axis) {
      const std::uint64_t m = f[axis];
      auto& block = masks[axis];
      block.assign(2 * (m - 1) * words, 0);
      for (std::uint64_t idx = 0; idx < type.order(); ++idx) {
        const std::uint64_t c = (idx / strides[axis]) % m;
        const std::uint64_t bit = std::uint64_t{1} << (idx % kWordBits);
        for (std::uint64_t t = 1; t < m; ++t) {
          const std::size_t base = 2 * (t - 1) * words;
          if (c < m - t) {
            block[base + idx / kWordBits] |= bit;
          } else {
            block[base + words + idx / kWordBits] |= bit;
          }
        }
      }
    }
  }
};

Group::Group(GroupType type) : impl_(std::make_shared<const Impl>(std::move(type))) {}

const GroupType& Group::type() const { return impl_->type; }

std::size_t Group::word_count() const { return impl_->words; }

std::uint64_t Group::stride(std::size_t axis) const { return impl_->strides.at(axis); }

std::span<const std::uint64_t> Group::axis_low_mask(std::size_t axis, std::uint64_t t) const {
  const auto& block = impl_->masks.at(axis);
  return {block.data() + 2 * (t - 1) * impl_->words, impl_->words};
}

std::span<const std::uint64_t> Group::axis_high_mask(std::size_t axis, std::uint64_t t) const {
  const auto& block = impl_->masks.at(axis);
  return {block.data() + (2 * (t - 1) + 1) * impl_->words, impl_->words};
}

void Group::check(const Element& a) const {
  const auto& f = type().invariant_factors();
  if (a.coords.size() != f.size()) {
    fail(ErrorCode::InvalidElement, "element has " + std::to_string(a.coords.size()) +
                                        " coordinates, group rank is " + std::to_string(f.size()));
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (a.coords[i] >= f[i]) {
      fail(ErrorCode::InvalidElement, "coordinate " + std::to_string(i) + " = " +
                                          std::to_string(a.coords[i]) + " out of range for Z_" +
                                          std::to_string(f[i]));
    }
  }
}

ElementIndex Group::encode(const Element& a) const {
  check(a);
  ElementIndex idx = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) idx += a.coords[i] * impl_->strides[i];
  return idx;
}

Element Group::decode(ElementIndex index) const {
  if (index >= order()) {
    fail(ErrorCode::InvalidElement, "index " + std::to_string(index) + " out of range");
  }
  const auto& f = type().invariant_factors();
  Element a;
  a.coords.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    a.coords[i] = index % f[i];
    index /= f[i];
  }
  return a;
}

std::uint64_t Group::coordinate(ElementIndex index, std::size_t axis) const {
  return (index / impl_->strides[axis]) % type().invariant_factors()[axis];
}

Element Group::zero() const { return Element{std::vector<std::uint64_t>(rank(), 0)}; }

Element Group::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  const auto& f = type().invariant_factors();
  Element c;
  c.coords.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c.coords[i] = (a.coords[i] + b.coords[i]) % f[i];
  return c;
}

Element Group::neg(const Element& a) const {
  check(a);
  const auto& f = type().invariant_factors();
  Element c;
  c.coords.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c.coords[i] = (f[i] - a.coords[i]) % f[i];
  return c;
}

ElementIndex Group::add(ElementIndex a, ElementIndex b) const {
  if (a >= order() || b >= order()) fail(ErrorCode::InvalidElement, "index out of range");
  const auto& f = type().invariant_factors();
  ElementIndex out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += ((a % f[i] + b % f[i]) % f[i]) * impl_->strides[i];
    a /= f[i];
    b /= f[i];
  }
  return out;
}

ElementIndex Group::neg(ElementIndex a) const {
  if (a >= order()) fail(ErrorCode::InvalidElement, "index out of range");
  const auto& f = type().invariant_factors();
  ElementIndex out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += ((f[i] - a % f[i]) % f[i]) * impl_->strides[i];
    a /= f[i];
  }
  return out;
}

ElementIndex Group::scale(ElementIndex a, std::uint64_t k) const {
  if (a >= order()) fail(ErrorCode::InvalidElement, "index out of range");
  const auto& f = type().invariant_factors();
  ElementIndex out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto c = a % f[i];
    // Orders fit a bit vector, so f[i] < 2^32 and the product cannot overflow.
    out += (c * (k % f[i])) % f[i] * impl_->strides[i];
    a /= f[i];
  }
  return out;
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (ElementIndex i = 0; i < order(); ++i) out.push_back(decode(i));
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

QuotientSpec quotient_from_divisors(const GroupType& g, std::vector<std::uint64_t> e) {
  const auto& f = g.invariant_factors();
  if (e.size() != f.size()) {
    fail(ErrorCode::InvalidIndex, "divisor vector length " + std::to_string(e.size()) +
                                      " does not match rank " + std::to_string(f.size()));
  }
  std::uint64_t d = 1;
  std::vector<std::uint64_t> kept;
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (e[i] == 0 || f[i] % e[i] != 0) {
      fail(ErrorCode::InvalidIndex, "e_" + std::to_string(i) + " = " + std::to_string(e[i]) +
                                        " does not divide " + std::to_string(f[i]));
    }
    d *= e[i];
    if (e[i] > 1) {
      if (!kept.empty() && e[i] % kept.back() != 0) {
        fail(ErrorCode::InvalidIndex, "divisor vector entries > 1 must form a divisor chain");
      }
      kept.push_back(e[i]);
      axes.push_back(i);
    }
  }
  if (d <= 1) fail(ErrorCode::InvalidIndex, "quotient index must be > 1");
  auto quotient = GroupType::from_factors(kept);
  // A chain is already in invariant-factor form.
  if (quotient.invariant_factors() != kept) {
    fail(ErrorCode::ConstructionInvariantViolated, "divisor chain did not normalize to itself");
  }
  return QuotientSpec{g, std::move(e), std::move(quotient), d, std::move(axes)};
}

QuotientSpec quotient_spec(const GroupType& g, std::uint64_t d) {
  if (d <= 1 || g.order() % d != 0) {
    fail(ErrorCode::InvalidIndex, "index " + std::to_string(d) + " is not a divisor > 1 of " +
                                      std::to_string(g.order()));
  }
  const auto& f = g.invariant_factors();
  std::vector<std::uint64_t> e(f.size(), 1);
  std::uint64_t remaining = d;
  for (std::size_t i = f.size(); i-- > 0;) {
    e[i] = std::gcd(f[i], remaining);
    remaining /= e[i];
  }
  if (remaining != 1) {
    fail(ErrorCode::ConstructionInvariantViolated, "greedy divisor vector did not absorb d");
  }
  return quotient_from_divisors(g, std::move(e));
}

Element project(const QuotientSpec& spec, const Element& a) {
  const auto& f = spec.parent.invariant_factors();
  if (a.coords.size() != f.size()) {
    fail(ErrorCode::SpecMismatch, "element rank does not match the quotient's parent group");
  }
  Element out;
  out.coords.reserve(spec.kept_axes.size());
  for (auto axis : spec.kept_axes) {
    if (a.coords[axis] >= f[axis]) fail(ErrorCode::InvalidElement, "coordinate out of range");
    out.coords.push_back(a.coords[axis] % spec.divisor_vector[axis]);
  }
  return out;
}

}  // namespace critnum
