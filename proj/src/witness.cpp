#include "critnum/witness.hpp"

#include <algorithm>
#include <numeric>

#include "critnum/error.hpp"
#include "critnum/formulas.hpp"
#include "critnum/sumset.hpp"

namespace critnum {

namespace {

struct Built {
  GroupSubset set;
  std::string branch;
};

[[noreturn]] void violated(const std::string& what) { fail(ErrorCode::ConstructionInvariantViolated, what); }

// Generating A ⊆ G, |A| = v(n,h), hA != G, following the induction on |G|.
Built build_hfold(const GroupType& type, int h) {
  const Group g(type);
  const auto n = static_cast<std::int64_t>(type.order());
  const auto vd = v_detail(n, h);

  // Some proper divisor attains the maximum: lift a witness from G/H.
  const auto proper = std::find_if(vd.maximizers.begin(), vd.maximizers.end(),
                                   [n](std::int64_t d) { return d < n; });
  if (proper != vd.maximizers.end()) {
    const auto d0 = *proper;
    const auto spec = quotient_spec(type, static_cast<std::uint64_t>(d0));
    auto below = build_hfold(spec.quotient, h);
    auto lifted = lift_preimage(spec, g, below.set);
    if (static_cast<std::int64_t>(lifted.size()) != vd.value) {
      violated("lift from index " + std::to_string(d0) + " has size " + std::to_string(lifted.size()) +
               ", expected v = " + std::to_string(vd.value));
    }
    return {std::move(lifted), "quotient(d0=" + std::to_string(d0) + "):" + below.branch};
  }

  const auto rank = type.rank();
  if (rank == 1 && factorize(type.order()).size() == 1 && factorize(type.order())[0].second == 1) {
    // Z_p: an initial interval {1, ..., floor((p-2)/h) + 1} misses h - 1.
    const std::int64_t top = floor_div(n - 2, h) + 1;
    GroupSubset a(g);
    for (std::int64_t x = 1; x <= top; ++x) a.insert(static_cast<ElementIndex>(x));
    return {std::move(a), "prime"};
  }

  // Only d = n attains the maximum, so every invariant factor is 1 mod h.
  const auto& f = type.invariant_factors();
  for (auto ni : f) {
    if ((ni - 1) % static_cast<std::uint64_t>(h) != 0) {
      violated("composite branch reached with h = " + std::to_string(h) + " not dividing " +
               std::to_string(ni) + " - 1");
    }
  }
  // A_i: coordinates below i free, coordinate i in {1, ..., (n_i - 1)/h}, the rest 0.
  GroupSubset a(g);
  std::uint64_t telescoped = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    const std::uint64_t stride = g.stride(i);
    const std::uint64_t top = (f[i] - 1) / static_cast<std::uint64_t>(h);
    for (std::uint64_t c = 1; c <= top; ++c) {
      for (std::uint64_t low = 0; low < stride; ++low) a.insert(c * stride + low);
    }
    telescoped += stride * top;
  }
  if (telescoped * static_cast<std::uint64_t>(h) != type.order() - 1 || a.size() != telescoped) {
    violated("coordinate blocks do not telescope to (n - 1)/h");
  }
  return {std::move(a), "composite"};
}

std::int64_t product(const std::vector<std::int64_t>& xs) {
  return std::accumulate(xs.begin(), xs.end(), std::int64_t{1}, std::multiplies<>());
}

// Quotient map onto the last t axes, coordinate i reduced mod d_i.
QuotientSpec block_quotient(const GroupType& g, const std::vector<std::int64_t>& quotient_type) {
  const auto r = g.rank();
  const auto t = quotient_type.size();
  std::vector<std::uint64_t> e(r, 1);
  for (std::size_t i = 0; i < t; ++i) e[r - t + i] = static_cast<std::uint64_t>(quotient_type[i]);
  return quotient_from_divisors(g, std::move(e));
}

void dfs_chains(const std::vector<std::uint64_t>& f, std::size_t t, std::vector<std::int64_t>& chain,
                std::int64_t upper, std::vector<std::vector<std::int64_t>>& out) {
  // The chain is built from its last entry down.
  if (chain.size() == t) {
    out.emplace_back(chain.rbegin(), chain.rend());
    return;
  }
  const std::size_t i = t - 1 - chain.size();        // position in the quotient type
  const std::size_t axis = f.size() - t + i;          // invariant factor it divides
  const auto limit = static_cast<std::int64_t>(std::gcd(f[axis], static_cast<std::uint64_t>(upper)));
  for (auto du : divisors(limit)) {
    const auto d = static_cast<std::int64_t>(du);
    if (d < 2) continue;
    chain.push_back(d);
    dfs_chains(f, t, chain, d, out);
    chain.pop_back();
  }
}

}  // namespace

std::int64_t BoundCertificate::index_d() const { return product(quotient_type); }

WitnessCertificate witness_chi_hat_h(const GroupType& g, int h) {
  if (h < 1) fail(ErrorCode::InvalidH, "h = " + std::to_string(h) + " must be >= 1");
  const auto n = static_cast<std::int64_t>(g.order());
  auto built = build_hfold(g, h);
  const auto expected = v(n, h);
  const bool generates = is_generating(built.set);
  const bool incomplete = !is_complete(hfold_sumset(built.set, h));
  if (static_cast<std::int64_t>(built.set.size()) != expected || !generates || !incomplete) {
    violated("witness for G = " + g.to_string() + ", h = " + std::to_string(h) + " failed its checks (size " +
             std::to_string(built.set.size()) + " vs " + std::to_string(expected) + ", generates " +
             std::to_string(generates) + ", incomplete " + std::to_string(incomplete) + ")");
  }
  return WitnessCertificate{g, WitnessMode::HFold, h, std::move(built.set), expected, generates,
                            incomplete, std::move(built.branch)};
}

bool quotient_type_feasible(const GroupType& g, const std::vector<std::int64_t>& quotient_type) {
  const auto& f = g.invariant_factors();
  const auto t = quotient_type.size();
  if (t == 0 || t > f.size()) return false;
  for (std::size_t i = 0; i < t; ++i) {
    const auto d = quotient_type[i];
    if (d < 2) return false;
    if (i + 1 < t && quotient_type[i + 1] % d != 0) return false;
    if (f[f.size() - t + i] % static_cast<std::uint64_t>(d) != 0) return false;
  }
  return true;
}

std::int64_t block_reach(const std::vector<std::int64_t>& quotient_type,
                         const std::vector<std::int64_t>& c_vector) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < quotient_type.size(); ++i) {
    total += (quotient_type[i] - 1 + c_vector[i] - 1) / c_vector[i];
  }
  return total;
}

BoundCertificate witness_prop_bound(const GroupType& g, const std::vector<std::int64_t>& quotient_type,
                                    const std::vector<std::int64_t>& c_vector, int s) {
  if (s < 1) fail(ErrorCode::InvalidS, "s = " + std::to_string(s) + " must be >= 1");
  if (!quotient_type_feasible(g, quotient_type)) {
    std::string q;
    for (auto d : quotient_type) q += (q.empty() ? "" : ",") + std::to_string(d);
    fail(ErrorCode::QuotientUnavailable, "(" + q + ") is not a quotient type of " + g.to_string());
  }
  if (c_vector.size() != quotient_type.size()) {
    fail(ErrorCode::ConditionViolated, "c-vector length must equal the quotient rank");
  }
  for (std::size_t i = 0; i < c_vector.size(); ++i) {
    if (c_vector[i] < 1 || c_vector[i] > quotient_type[i] - 1) {
      fail(ErrorCode::ConditionViolated, "c_" + std::to_string(i + 1) + " = " + std::to_string(c_vector[i]) +
                                             " outside [1, " + std::to_string(quotient_type[i] - 1) + "]");
    }
  }
  if (block_reach(quotient_type, c_vector) < s + 1) {
    fail(ErrorCode::ConditionViolated, "sum of ceil((d_i - 1)/c_i) is below s + 1");
  }

  const Group parent(g);
  const auto spec = block_quotient(g, quotient_type);
  const Group k(spec.quotient);
  // B = {0} ∪ B_1 ∪ ... ∪ B_t, B_i = multiples 1..c_i of the i-th unit vector.
  GroupSubset b = GroupSubset::singleton(k, 0);
  for (std::size_t i = 0; i < quotient_type.size(); ++i) {
    for (std::int64_t c = 1; c <= c_vector[i]; ++c) b.insert(static_cast<ElementIndex>(c) * k.stride(i));
  }
  auto a = lift_preimage(spec, parent, b);

  const auto n = static_cast<std::int64_t>(g.order());
  const auto d = product(quotient_type);
  const auto sum_c = std::accumulate(c_vector.begin(), c_vector.end(), std::int64_t{0});
  const auto expected_size = (1 + sum_c) * (n / d);
  const bool generates = is_generating(a);
  const bool incomplete = !is_complete(interval_sumset(a, s));
  if (static_cast<std::int64_t>(a.size()) != expected_size || !generates || !incomplete) {
    violated("block witness for G = " + g.to_string() + ", s = " + std::to_string(s) + " failed its checks");
  }
  return BoundCertificate{g,        s,          quotient_type, c_vector, expected_size + 1, std::move(a),
                          generates, incomplete, false};
}

std::vector<std::vector<std::int64_t>> feasible_quotient_types(const GroupType& g) {
  const auto& f = g.invariant_factors();
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t t = 1; t <= f.size(); ++t) {
    std::vector<std::int64_t> chain;
    dfs_chains(f, t, chain, static_cast<std::int64_t>(f.back()), out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BoundCertificate prop_bound_search(const GroupType& g, int s) {
  if (s < 1) fail(ErrorCode::InvalidS, "s = " + std::to_string(s) + " must be >= 1");
  const auto n = static_cast<std::int64_t>(g.order());

  struct Best {
    std::int64_t bound = 1;
    std::int64_t d = 0;
    std::vector<std::int64_t> c;
    std::vector<std::int64_t> type;
  } best;
  bool found = false;

  for (const auto& type : feasible_quotient_types(g)) {
    const auto d = product(type);
    std::vector<std::int64_t> c(type.size(), 1);
    while (true) {
      if (block_reach(type, c) >= s + 1) {
        const auto sum_c = std::accumulate(c.begin(), c.end(), std::int64_t{0});
        const auto bound = (1 + sum_c) * (n / d) + 1;
        const bool better =
            !found || bound > best.bound ||
            (bound == best.bound &&
             std::tie(d, c, type) < std::tie(best.d, best.c, best.type));
        if (better) {
          best = {bound, d, c, type};
          found = true;
        }
      }
      // Next c-vector in lexicographic order.
      std::size_t i = c.size();
      while (i-- > 0) {
        if (++c[i] <= type[i] - 1) break;
        c[i] = 1;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }

  if (!found) {
    const Group grp(g);
    return BoundCertificate{g, s, {}, {}, 1, GroupSubset(grp), false, false, true};
  }
  return witness_prop_bound(g, best.type, best.c, s);
}

}  // namespace critnum
