#include "critnum/formulas.hpp"

#include <algorithm>

#include "critnum/error.hpp"

namespace critnum {

namespace {

void require_order(std::int64_t n) {
  if (n < 2) fail(ErrorCode::InvalidOrder, "n = " + std::to_string(n) + " must be >= 2");
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::int64_t smallest_prime_divisor(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

}  // namespace

CriticalKind CriticalKind::chi_h(int h) {
  if (h < 1) fail(ErrorCode::InvalidH, "h = " + std::to_string(h) + " must be >= 1");
  return {CriticalTag::ChiH, h};
}
CriticalKind CriticalKind::chi_interval(int s) {
  if (s < 1) fail(ErrorCode::InvalidS, "s = " + std::to_string(s) + " must be >= 1");
  return {CriticalTag::ChiInterval, s};
}
CriticalKind CriticalKind::chi_hat_h(int h) {
  if (h < 1) fail(ErrorCode::InvalidH, "h = " + std::to_string(h) + " must be >= 1");
  return {CriticalTag::ChiHatH, h};
}
CriticalKind CriticalKind::chi_hat_interval(int s) {
  if (s < 1) fail(ErrorCode::InvalidS, "s = " + std::to_string(s) + " must be >= 1");
  return {CriticalTag::ChiHatInterval, s};
}
CriticalKind CriticalKind::cr() { return {CriticalTag::Cr, 0}; }
CriticalKind CriticalKind::cr_star() { return {CriticalTag::CrStar, 0}; }

std::string CriticalKind::to_string() const {
  switch (tag) {
    case CriticalTag::ChiH: return "chi_h(h=" + std::to_string(parameter) + ")";
    case CriticalTag::ChiInterval: return "chi_interval(s=" + std::to_string(parameter) + ")";
    case CriticalTag::ChiHatH: return "chi_hat_h(h=" + std::to_string(parameter) + ")";
    case CriticalTag::ChiHatInterval: return "chi_hat_interval(s=" + std::to_string(parameter) + ")";
    case CriticalTag::Cr: return "cr";
    case CriticalTag::CrStar: return "cr_star";
  }
  return "unknown";
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) fail(ErrorCode::InvalidOrder, "isqrt of a negative number");
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t f_d(std::int64_t n, std::int64_t d, std::int64_t h) {
  if (h < 1) fail(ErrorCode::InvalidH, "h = " + std::to_string(h) + " must be >= 1");
  if (d < 1 || n < 1 || n % d != 0) {
    fail(ErrorCode::InvalidDivisor, std::to_string(d) + " is not a divisor of " + std::to_string(n));
  }
  return (floor_div(d - 2, h) + 1) * (n / d);
}

VResult v_detail(std::int64_t n, std::int64_t h) {
  require_order(n);
  VResult out{0, {}};
  bool first = true;
  for (auto du : divisors(n)) {
    const auto d = static_cast<std::int64_t>(du);
    const auto value = f_d(n, d, h);
    if (first || value > out.value) {
      out.value = value;
      out.maximizers.assign(1, d);
      first = false;
    } else if (value == out.value) {
      out.maximizers.push_back(d);
    }
  }
  return out;
}

std::int64_t v(std::int64_t n, std::int64_t h) { return v_detail(n, h).value; }

std::int64_t chi_h(std::int64_t n, std::int64_t h) { return v(n, h) + 1; }

std::int64_t chi_interval(std::int64_t n, std::int64_t s) {
  if (s < 1) fail(ErrorCode::InvalidS, "s = " + std::to_string(s) + " must be >= 1");
  return v(n, s) + 1;
}

std::int64_t chi_hat_h(std::int64_t n, std::int64_t h) { return v(n, h) + 1; }

CrPair cr_pair(const GroupType& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (n < 10) {
    fail(ErrorCode::OutsideTheoremDomain,
         "cr/cr* closed form holds for n >= 10 only (n = " + std::to_string(n) + "); use the oracle");
  }
  const std::int64_t p = smallest_prime_divisor(n);
  bool sqrt_branch = false;
  if (g.is_cyclic()) {
    if (p == n) {
      sqrt_branch = true;
    } else {
      const std::int64_t q = n / p;
      sqrt_branch = is_prime(q) && p >= 3 && p <= q && q <= p + isqrt(4 * (p - 2)) + 1;
    }
  }
  // floor(2 sqrt(m)) = floor(sqrt(4m)).
  const std::int64_t value = sqrt_branch ? isqrt(4 * (n - 2)) : n / p + p - 2;
  return {value, value + 1, sqrt_branch};
}

bool has_non_elementary2_subgroup_of_order(const GroupType& g, std::int64_t m) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (m < 1 || n % m != 0) return false;
  std::int64_t odd = m;
  unsigned k = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++k;
  }
  // Abelian groups have subgroups of every order dividing n; an odd factor
  // rules out the elementary abelian 2 case.
  if (odd > 1) return true;
  if (k < 2) return false;
  // m = 2^k: need an element of order 4 inside a 2-subgroup of order 2^k.
  std::int64_t two_part = 1;
  std::uint64_t two_exponent = 1;
  for (auto f : g.invariant_factors()) {
    std::uint64_t t = 1;
    while (f % 2 == 0) {
      f /= 2;
      t *= 2;
    }
    two_part *= static_cast<std::int64_t>(t);
    two_exponent = std::max(two_exponent, t);
  }
  return two_part % m == 0 && two_exponent >= 4;
}

Interval3Result chi_hat_interval3_detail(const GroupType& g) {
  if (g.order() <= 4 && !g.is_elementary_abelian_2()) {
    fail(ErrorCode::OutsideValidatedDomain,
         "chi_hat_interval3 is validated for n >= 5 only (brute force gives 1 for Z_3 and Z_4)");
  }
  return chi_hat_interval3_unguarded(g);
}

Interval3Result chi_hat_interval3_unguarded(const GroupType& g) {
  if (g.is_elementary_abelian_2()) {
    fail(ErrorCode::WrongGroupClass, "elementary abelian 2-groups are covered by chi_hat_2group");
  }
  const auto n = static_cast<std::int64_t>(g.order());
  for (auto du : divisors(n)) {
    const auto m = static_cast<std::int64_t>(du);
    if (m % 3 != 2 || !has_non_elementary2_subgroup_of_order(g, m)) continue;
    // (1 + 1/m) * n/3 = ((m+1)/3) * (n/m), exact because m = 2 mod 3.
    return {(m + 1) / 3 * (n / m) + 1, m};
  }
  return {n / 3 + 1, std::nullopt};
}

std::int64_t chi_hat_interval3(const GroupType& g) { return chi_hat_interval3_detail(g).value; }

std::int64_t chi_hat_cyclic(std::int64_t n, std::int64_t s) {
  if (n < 1) fail(ErrorCode::InvalidOrder, "n = " + std::to_string(n) + " must be >= 1");
  if (s < 1) fail(ErrorCode::InvalidS, "s = " + std::to_string(s) + " must be >= 1");
  if (n <= s + 1) return 1;
  std::int64_t best = 0;
  for (auto du : divisors(n)) {
    const auto d = static_cast<std::int64_t>(du);
    if (d >= s + 2) best = std::max(best, f_d(n, d, s));
  }
  return best + 1;
}

std::int64_t chi_hat_2group(std::int64_t r, std::int64_t s) {
  if (r < 1) fail(ErrorCode::InvalidOrder, "rank r = " + std::to_string(r) + " must be >= 1");
  if (s < 2) fail(ErrorCode::OutsideTheoremDomain, "the 2-group closed form needs s >= 2");
  if (r <= s) return 1;
  return (s + 2) * (std::int64_t{1} << (r - s - 1)) + 1;
}

std::int64_t sumfree_bound(std::int64_t n) {
  require_order(n);
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(n))) {
    const auto pi = static_cast<std::int64_t>(p);
    if (pi % 3 == 2) return (pi + 1) / 3 * (n / pi);
  }
  return n / 3;
}

}  // namespace critnum
