#include "critnum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "critnum/error.hpp"
#include "critnum/sumset.hpp"

namespace critnum {

namespace {

void check_budget(std::uint64_t n, const OracleBudget& budget) {
  const auto cap = std::min(budget.max_n, OracleBudget::kHardCap);
  if (n > cap) {
    fail(ErrorCode::BudgetExceeded, "group order " + std::to_string(n) + " exceeds the oracle budget of " +
                                        std::to_string(cap));
  }
}

// Scatter the low bits of `packed` onto the positions listed in `universe`.
std::uint64_t scatter(std::uint64_t packed, const std::vector<ElementIndex>& universe) {
  std::uint64_t out = 0;
  for (; packed; packed &= packed - 1) {
    out |= std::uint64_t{1} << universe[static_cast<unsigned>(std::countr_zero(packed))];
  }
  return out;
}

struct SearchPlan {
  Group group;
  CriticalKind kind;
  bool restrict_generating;
  std::vector<ElementIndex> universe;
  std::uint64_t forced = 0;  // bits present in every candidate
  unsigned min_free = 0;     // smallest number of universe elements to pick
};

bool qualifies_and_incomplete(const SearchPlan& plan, std::uint64_t mask) {
  const auto a = GroupSubset::from_mask(plan.group, mask);
  if (!is_incomplete_for(a, plan.kind)) return false;
  return !plan.restrict_generating || is_generating(a);
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Scans ranks [begin, end) of the k-subsets of the universe; lowers `best`
// to the smallest rank found. Stops once its rank passes `best`.
std::uint64_t scan_range(const SearchPlan& plan, unsigned k, std::uint64_t begin, std::uint64_t end,
                         std::atomic<std::uint64_t>& best) {
  const auto m = static_cast<unsigned>(plan.universe.size());
  std::uint64_t packed = unrank_combination(begin, m, k);
  std::uint64_t checked = 0;
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    if (rank > best.load(std::memory_order_relaxed)) break;
    ++checked;
    if (qualifies_and_incomplete(plan, scatter(packed, plan.universe) | plan.forced)) {
      std::uint64_t cur = best.load();
      while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
      }
      break;
    }
    if (rank + 1 < end) packed = next_combination(packed);
  }
  return checked;
}

}  // namespace

OracleBudget OracleBudget::from_env(bool sweep, std::uint64_t requested) {
  OracleBudget b{requested != 0 ? requested : (sweep ? kSweepDefault : kSingleDefault)};
  if (const char* env = std::getenv("CRITNUM_MAX_N")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') b.max_n = std::min<std::uint64_t>(b.max_n, value);
  }
  return b;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t unrank_combination(std::uint64_t rank, unsigned m, unsigned k) {
  // Combinatorial number system: rank = sum_i C(c_i, i) with c_k > ... > c_1.
  std::uint64_t mask = 0;
  unsigned hi = m;
  for (unsigned i = k; i >= 1; --i) {
    unsigned c = i - 1;
    while (c + 1 < hi && binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    mask |= std::uint64_t{1} << c;
    hi = c;
  }
  return mask;
}

std::uint64_t next_combination(std::uint64_t mask) {
  if (mask == 0) return 0;
  const std::uint64_t low = mask & (~mask + 1);
  const std::uint64_t ripple = mask + low;
  return ripple | (((mask ^ ripple) >> 2) / low);
}

bool is_incomplete_for(const GroupSubset& a, const CriticalKind& kind) {
  switch (kind.tag) {
    case CriticalTag::ChiH:
    case CriticalTag::ChiHatH:
      return !is_complete(hfold_sumset(a, kind.parameter));
    case CriticalTag::ChiInterval:
    case CriticalTag::ChiHatInterval:
      return !is_complete(interval_sumset(a, kind.parameter));
    case CriticalTag::Cr:
    case CriticalTag::CrStar:
      return !is_complete(subset_sums(a));
  }
  return false;
}

OracleResult brute_critical(const OracleQuery& q, const OracleOptions& options) {
  const auto n = q.group.order();
  check_budget(n, options.budget);

  SearchPlan plan{Group(q.group), q.kind, q.restrict_generating || q.kind.restricts_to_generating(), {}, 0, 0};
  const bool exclude_zero = q.exclude_zero || q.kind.tag == CriticalTag::CrStar;
  if (q.translation_reduced && (plan.restrict_generating || exclude_zero || q.kind.uses_subset_sums())) {
    fail(ErrorCode::ConditionViolated, "translation reduction applies to unrestricted hA / [0,s]A only");
  }
  for (ElementIndex x = 0; x < n; ++x) {
    if (x == 0 && (exclude_zero || q.translation_reduced)) continue;
    plan.universe.push_back(x);
  }
  if (q.translation_reduced) plan.forced = 1;
  // hA and [0,s]A need a nonempty A; ΣA does not.
  const unsigned min_size = q.kind.uses_subset_sums() ? 0 : 1;
  const unsigned forced_count = q.translation_reduced ? 1 : 0;
  const auto m = static_cast<unsigned>(plan.universe.size());
  const unsigned workers = std::max(1U, options.workers);

  OracleResult result{1, std::nullopt, 0};
  for (unsigned size = m + forced_count; size + 1 > min_size && size >= forced_count; --size) {
    const unsigned k = size - forced_count;
    const auto total = binomial(m, k);
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<std::uint64_t> checked{0};
    if (workers == 1 || total < 2 * workers) {
      checked += scan_range(plan, k, 0, total, best);
    } else {
      // Contiguous rank ranges; the smallest rank found wins, so the result
      // is independent of the worker count.
      std::vector<std::thread> pool;
      const auto chunk = (total + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const auto begin = w * chunk;
        const auto end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] { checked += scan_range(plan, k, begin, end, best); });
      }
      for (auto& t : pool) t.join();
    }
    result.candidates_checked += checked.load();
    if (best.load() != kNone) {
      const auto mask = scatter(unrank_combination(best.load(), m, k), plan.universe) | plan.forced;
      result.value = static_cast<std::int64_t>(size) + 1;
      result.extremal = GroupSubset::from_mask(plan.group, mask);
      return result;
    }
    if (size == 0) break;
  }
  return result;
}

std::int64_t brute_cr(const GroupType& g, const OracleOptions& options) {
  return brute_critical({g, CriticalKind::cr()}, options).value;
}

std::int64_t brute_cr_star(const GroupType& g, const OracleOptions& options) {
  return brute_critical({g, CriticalKind::cr_star()}, options).value;
}

namespace {

std::uint64_t rotate(std::uint64_t mask, unsigned k, unsigned n) {
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  k %= n;
  if (k == 0) return mask;
  return ((mask << k) | (mask >> (n - k))) & full;
}

struct SumFreeSearch {
  unsigned n;
  std::uint64_t full;
  int best = 0;

  // `sums` = 2A, `diffs` = (A - A) without 0; a candidate y is dead once it
  // lies in A, 2A or A - A.
  void extend(std::uint64_t a, std::uint64_t sums, std::uint64_t diffs, unsigned next) {
    const int size = std::popcount(a);
    best = std::max(best, size);
    const std::uint64_t above = next >= n ? 0 : (full & ~((std::uint64_t{1} << next) - 1));
    std::uint64_t open = above & ~(a | sums | diffs);
    if (size + std::popcount(open) <= best) return;
    for (; open; open &= open - 1) {
      const auto x = static_cast<unsigned>(std::countr_zero(open));
      const std::uint64_t with_x = a | (std::uint64_t{1} << x);
      const std::uint64_t new_sums = sums | rotate(with_x, x, n);
      if (with_x & new_sums) continue;
      std::uint64_t new_diffs = diffs;
      for (auto rest = a; rest; rest &= rest - 1) {
        const auto y = static_cast<unsigned>(std::countr_zero(rest));
        new_diffs |= std::uint64_t{1} << ((x + n - y) % n);
        new_diffs |= std::uint64_t{1} << ((y + n - x) % n);
      }
      extend(with_x, new_sums, new_diffs, x + 1);
      if (size + std::popcount(open) <= best) return;
    }
  }
};

}  // namespace

std::int64_t brute_max_sumfree(std::int64_t n, const OracleOptions& options) {
  if (n < 2) fail(ErrorCode::InvalidOrder, "n = " + std::to_string(n) + " must be >= 2");
  check_budget(static_cast<std::uint64_t>(n), options.budget);
  const auto un = static_cast<unsigned>(n);
  SumFreeSearch search{un, un == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << un) - 1};
  // 0 is never in a sum-free set (0 + 0 = 0).
  search.extend(0, 0, 0, 1);
  return search.best;
}

std::vector<GroupSubset> enumerate_subgroups(const GroupType& g, const OracleOptions& options) {
  const auto n = g.order();
  check_budget(n, options.budget);
  const Group grp(g);
  // Every subgroup is reached from {0} by adjoining one element at a time.
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto h : frontier) {
      for (ElementIndex x = 1; x < n; ++x) {
        if ((h >> x) & 1U) continue;
        auto gens = GroupSubset::from_mask(grp, h);
        gens.insert(x);
        const auto closed = subgroup_generated(gens).mask();
        if (seen.insert(closed).second) next.push_back(closed);
      }
    }
    frontier = std::move(next);
  }
  std::vector<GroupSubset> out;
  for (auto mask : seen) out.push_back(GroupSubset::from_mask(grp, mask));
  std::sort(out.begin(), out.end(), [](const GroupSubset& a, const GroupSubset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
  });
  return out;
}

}  // namespace critnum
