#include "critnum/sumset.hpp"

#include <bit>
#include <utility>

#include "critnum/error.hpp"
#include "critnum/kernels.hpp"

namespace critnum {

namespace {

using Words = std::vector<std::uint64_t>;

// acc |= src + a.
//
// A translation is a product of per-axis cyclic shifts. Along a non-final axis
// the elements whose coordinate stays below n_i move up by t * stride and the
// rest wrap down by (n_i - t) * stride; the final axis spans the whole vector
// so its shift is a plain rotation. The final axis runs last, which is the
// only step allowed to spill bits past the order (cleared by the caller).
void translate_or(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src, const Group& g,
                  ElementIndex a, Words& scratch_a, Words& scratch_b) {
  const auto& f = g.type().invariant_factors();
  const std::size_t r = f.size();

  std::size_t last_axis = r;
  for (std::size_t i = 0; i < r; ++i) {
    if (g.coordinate(a, i) != 0) last_axis = i;
  }
  if (last_axis == r) {
    kernels::or_into(acc, src);
    return;
  }

  std::span<const std::uint64_t> cur = src;
  Words* next = &scratch_a;
  Words* spare = &scratch_b;
  for (std::size_t i = 0; i <= last_axis; ++i) {
    const std::uint64_t t = g.coordinate(a, i);
    if (t == 0) continue;
    std::span<std::uint64_t> dst = acc;
    if (i != last_axis) {
      std::fill(next->begin(), next->end(), 0);
      dst = *next;
    }
    const std::uint64_t stride = g.stride(i);
    if (i + 1 == r) {
      const std::uint64_t k = t * stride;
      kernels::or_shift_left(dst, cur, nullptr, k);
      kernels::or_shift_right(dst, cur, nullptr, g.order() - k);
    } else {
      kernels::or_shift_left(dst, cur, g.axis_low_mask(i, t).data(), t * stride);
      kernels::or_shift_right(dst, cur, g.axis_high_mask(i, t).data(), (f[i] - t) * stride);
    }
    if (i != last_axis) {
      cur = *next;
      std::swap(next, spare);
    }
  }
}

struct Scratch {
  Words a, b;
  explicit Scratch(const Group& g) : a(g.word_count(), 0), b(g.word_count(), 0) {}
};

GroupSubset sumset_impl(const GroupSubset& a, const GroupSubset& b, Scratch& scratch) {
  const Group& g = a.group();
  const GroupSubset& small = a.size() <= b.size() ? a : b;
  const GroupSubset& large = a.size() <= b.size() ? b : a;
  SubsetBuilder out(g);
  const auto words = small.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (auto bits = words[w]; bits; bits &= bits - 1) {
      const ElementIndex x = 64 * w + static_cast<unsigned>(std::countr_zero(bits));
      translate_or(out.words(), large.words(), g, x, scratch.a, scratch.b);
    }
  }
  return std::move(out).finish();
}

void require_same_group(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.group() == b.group())) fail(ErrorCode::SpecMismatch, "sumset operands live in different groups");
}

}  // namespace

GroupSubset translate(const GroupSubset& b, ElementIndex a) {
  const Group& g = b.group();
  if (a >= g.order()) fail(ErrorCode::InvalidElement, "translation by out-of-range index");
  Scratch scratch(g);
  SubsetBuilder out(g);
  translate_or(out.words(), b.words(), g, a, scratch.a, scratch.b);
  return std::move(out).finish();
}

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  Scratch scratch(a.group());
  return sumset_impl(a, b, scratch);
}

GroupSubset hfold_sumset(const GroupSubset& a, int h) {
  if (a.empty()) fail(ErrorCode::EmptySet, "hA is defined for nonempty A only");
  if (h <= 0) fail(ErrorCode::InvalidH, "h = " + std::to_string(h) + " must be >= 1");
  Scratch scratch(a.group());
  GroupSubset acc = a;
  for (int i = 1; i < h; ++i) acc = sumset_impl(acc, a, scratch);
  return acc;
}

GroupSubset interval_sumset(const GroupSubset& a, int s) {
  if (a.empty()) fail(ErrorCode::EmptySet, "[0,s]A is defined for nonempty A only");
  if (s < 0) fail(ErrorCode::InvalidS, "s = " + std::to_string(s) + " must be >= 0");
  Scratch scratch(a.group());
  GroupSubset layer = GroupSubset::singleton(a.group(), 0);
  GroupSubset acc = layer;
  for (int i = 1; i <= s; ++i) {
    layer = sumset_impl(layer, a, scratch);
    acc |= layer;
  }
  return acc;
}

GroupSubset subset_sums(const GroupSubset& a) {
  const Group& g = a.group();
  Scratch scratch(g);
  GroupSubset acc = GroupSubset::singleton(g, 0);
  for (auto x : a.indices()) {
    SubsetBuilder next(g);
    kernels::or_into(next.words(), acc.words());
    translate_or(next.words(), acc.words(), g, x, scratch.a, scratch.b);
    acc = std::move(next).finish();
  }
  return acc;
}

bool is_complete(const GroupSubset& s) { return s.size() == s.group().order(); }

}  // namespace critnum
