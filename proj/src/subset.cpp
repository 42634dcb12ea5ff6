#include "critnum/subset.hpp"

#include <bit>

#include "critnum/error.hpp"
#include "critnum/kernels.hpp"

namespace critnum {

GroupSubset::GroupSubset(Group group)
    : group_(std::move(group)), words_(group_.word_count(), 0) {}

GroupSubset GroupSubset::full(Group group) {
  GroupSubset s(std::move(group));
  const auto n = s.group_.order();
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    const std::uint64_t bits_here = std::min<std::uint64_t>(64, n - 64 * w);
    s.words_[w] = bits_here == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_here) - 1;
  }
  s.size_ = n;
  return s;
}

GroupSubset GroupSubset::singleton(Group group, ElementIndex a) {
  GroupSubset s(std::move(group));
  s.insert(a);
  return s;
}

GroupSubset GroupSubset::from_indices(Group group, std::span<const ElementIndex> indices) {
  GroupSubset s(std::move(group));
  for (auto i : indices) s.insert(i);
  return s;
}

GroupSubset GroupSubset::from_indices(Group group, std::initializer_list<ElementIndex> indices) {
  return from_indices(std::move(group), std::span<const ElementIndex>(indices.begin(), indices.size()));
}

GroupSubset GroupSubset::from_elements(Group group, std::span<const Element> elements) {
  GroupSubset s(std::move(group));
  for (const auto& e : elements) s.insert(s.group_.encode(e));
  return s;
}

GroupSubset GroupSubset::from_mask(Group group, std::uint64_t mask) {
  GroupSubset s(std::move(group));
  const auto n = s.group_.order();
  if (n > 64) fail(ErrorCode::InvalidElement, "from_mask requires a group of order <= 64");
  if (n < 64 && (mask >> n) != 0) fail(ErrorCode::InvalidElement, "mask has bits beyond the group order");
  s.words_[0] = mask;
  s.size_ = static_cast<std::size_t>(std::popcount(mask));
  return s;
}

GroupSubset GroupSubset::from_words(Group group, std::vector<std::uint64_t> words) {
  GroupSubset s(std::move(group));
  if (words.size() != s.words_.size()) fail(ErrorCode::SpecMismatch, "word count does not match group");
  s.words_ = std::move(words);
  const auto tail = s.group_.order() % 64;
  if (tail != 0) s.words_.back() &= (std::uint64_t{1} << tail) - 1;
  s.recount();
  return s;
}

void GroupSubset::recount() { size_ = kernels::popcount(words_); }

bool GroupSubset::contains(ElementIndex a) const {
  if (a >= group_.order()) return false;
  return (words_[a / 64] >> (a % 64)) & 1U;
}

void GroupSubset::insert(ElementIndex a) {
  if (a >= group_.order()) fail(ErrorCode::InvalidElement, "index " + std::to_string(a) + " out of range");
  auto& w = words_[a / 64];
  const auto bit = std::uint64_t{1} << (a % 64);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void GroupSubset::erase(ElementIndex a) {
  if (a >= group_.order()) return;
  auto& w = words_[a / 64];
  const auto bit = std::uint64_t{1} << (a % 64);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

std::vector<ElementIndex> GroupSubset::indices() const {
  std::vector<ElementIndex> out;
  out.reserve(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits; bits &= bits - 1) {
      out.push_back(64 * w + static_cast<unsigned>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Element> GroupSubset::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (auto i : indices()) out.push_back(group_.decode(i));
  return out;
}

void GroupSubset::check_same_group(const GroupSubset& other) const {
  if (!(group_ == other.group_)) fail(ErrorCode::SpecMismatch, "subsets belong to different groups");
}

bool GroupSubset::is_subset_of(const GroupSubset& other) const {
  check_same_group(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

GroupSubset& GroupSubset::operator|=(const GroupSubset& other) {
  check_same_group(other);
  kernels::or_into(words_, other.words_);
  recount();
  return *this;
}

std::string GroupSubset::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const auto n = group_.order();
  std::string out((n + 3) / 4, '0');
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto nibble = (words_[(4 * k) / 64] >> ((4 * k) % 64)) & 0xF;
    out[k] = digits[nibble];
  }
  return out;
}

GroupSubset GroupSubset::from_hex(Group group, std::string_view hex) {
  GroupSubset s(std::move(group));
  const auto n = s.group_.order();
  if (hex.size() != (n + 3) / 4) {
    fail(ErrorCode::ParseError, "hex subset has " + std::to_string(hex.size()) + " digits, expected " +
                                    std::to_string((n + 3) / 4));
  }
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const char c = hex[k];
    std::uint64_t nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<std::uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<std::uint64_t>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<std::uint64_t>(c - 'A' + 10);
    } else {
      fail(ErrorCode::ParseError, "invalid hex digit at position " + std::to_string(k));
    }
    if (4 * k + 4 > n && (nibble >> (n - 4 * k)) != 0) {
      fail(ErrorCode::ParseError, "hex subset sets bits beyond the group order");
    }
    s.words_[(4 * k) / 64] |= nibble << ((4 * k) % 64);
  }
  s.recount();
  return s;
}

GroupSubset SubsetBuilder::finish() && {
  const auto tail = subset_.group_.order() % 64;
  if (tail != 0) subset_.words_.back() &= (std::uint64_t{1} << tail) - 1;
  subset_.recount();
  return std::move(subset_);
}

}  // namespace critnum
