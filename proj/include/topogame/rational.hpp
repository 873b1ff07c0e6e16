#pragma once

// Exact rationals and the fixed enumerations used by the built-in space of
// rationals: a diagonal enumeration of Q (by |p| + q) and a pairing-based
// enumeration of open intervals with dyadic endpoints.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "core.hpp"

namespace topogame::q {

using Rational = boost::rational<std::int64_t>;

struct Interval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

inline bool overlap(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

namespace detail {

// Euler phi prefix sums and smallest prime factors up to kMaxDiagonal.
struct TotientTable {
  static constexpr std::uint32_t kMaxDiagonal = 1u << 20;
  std::vector<std::uint32_t> spf;
  std::vector<std::uint64_t> prefix;  // prefix[s] = sum_{t=2}^{s} phi(t)

  TotientTable() : spf(kMaxDiagonal + 1, 0), prefix(kMaxDiagonal + 1, 0) {
    std::vector<std::uint32_t> phi(kMaxDiagonal + 1, 0);
    std::vector<std::uint32_t> primes;
    phi[1] = 1;
    for (std::uint32_t i = 2; i <= kMaxDiagonal; ++i) {
      if (spf[i] == 0) {
        spf[i] = i;
        phi[i] = i - 1;
        primes.push_back(i);
      }
      for (auto p : primes) {
        const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
        if (p > spf[i] || ip > kMaxDiagonal) break;
        spf[ip] = p;
        phi[ip] = (p == spf[i]) ? phi[i] * p : phi[i] * (p - 1);
      }
    }
    for (std::uint32_t s = 2; s <= kMaxDiagonal; ++s) prefix[s] = prefix[s - 1] + phi[s];
  }

  std::vector<std::uint64_t> distinct_primes(std::uint64_t s) const {
    std::vector<std::uint64_t> out;
    while (s > 1) {
      const auto p = spf[s];
      out.push_back(p);
      while (s % p == 0) s /= p;
    }
    return out;
  }

  // First index of diagonal s (s >= 1).
  std::uint64_t start(std::uint64_t s) const { return s == 1 ? 0 : 1 + 2 * prefix[s - 1]; }
};

inline const TotientTable& totients() {
  static const TotientTable table;
  return table;
}

// Number of t in [1, x] with gcd(t, s) = 1.
inline std::uint64_t count_coprime(std::uint64_t x, const std::vector<std::uint64_t>& primes) {
  std::int64_t total = 0;
  const std::size_t k = primes.size();
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (sub & (std::uint64_t{1} << i)) d *= primes[i];
    const auto term = static_cast<std::int64_t>(x / d);
    total += (std::popcount(sub) % 2) ? -term : term;
  }
  return static_cast<std::uint64_t>(total);
}

inline std::int64_t pow2(std::uint64_t e) {
  if (e > 40) throw DimensionError("dyadic exponent too large: " + std::to_string(e));
  return std::int64_t{1} << e;
}

}  // namespace detail

/// Point n of the diagonal enumeration of Q. Diagonal s >= 2 lists the
/// reduced fractions p/q with |p| + q = s, by ascending |p|, positive first.
inline Rational rational_at(std::uint64_t n) {
  if (n == 0) return Rational(0);
  const auto& t = detail::totients();
  // largest s with start(s) <= n
  std::uint64_t lo = 2, hi = detail::TotientTable::kMaxDiagonal;
  if (t.start(hi) <= n) throw DimensionError("rational index beyond enumeration table: " + std::to_string(n));
  while (lo + 1 < hi) {
    const auto mid = (lo + hi) / 2;
    if (t.start(mid) <= n) lo = mid; else hi = mid;
  }
  const std::uint64_t s = lo;
  const std::uint64_t r = n - t.start(s);
  const std::uint64_t rank = r / 2;  // 0-based rank among a in [1, s-1] coprime to s
  const auto primes = t.distinct_primes(s);
  std::uint64_t a_lo = 1, a_hi = s - 1;
  while (a_lo < a_hi) {
    const auto mid = (a_lo + a_hi) / 2;
    if (detail::count_coprime(mid, primes) >= rank + 1) a_hi = mid; else a_lo = mid + 1;
  }
  const auto a = static_cast<std::int64_t>(a_lo);
  const auto q = static_cast<std::int64_t>(s) - a;
  return Rational((r % 2) ? -a : a, q);
}

inline std::uint64_t rational_index(const Rational& x) {
  if (x.numerator() == 0) return 0;
  const auto& t = detail::totients();
  const std::int64_t p = x.numerator();
  const std::int64_t q = x.denominator();
  const auto a = static_cast<std::uint64_t>(p < 0 ? -p : p);
  const std::uint64_t s = a + static_cast<std::uint64_t>(q);
  if (s > detail::TotientTable::kMaxDiagonal)
    throw DimensionError("rational outside enumeration table");
  const auto rank = detail::count_coprime(a, t.distinct_primes(s)) - 1;
  return t.start(s) + 2 * rank + (p < 0 ? 1 : 0);
}

/// Dyadic rationals Z[1/2], bijectively: i -> (e, j) = unpair(i); e = 0 gives the
/// integer zigzag(j), e > 0 gives (2 zigzag(j) + 1) / 2^e.
inline Rational dyadic_at(std::uint64_t i) {
  const auto [e, j] = unpair(i);
  if (e == 0) return Rational(zigzag(j));
  return Rational(2 * zigzag(j) + 1, detail::pow2(e));
}

inline bool is_dyadic(const Rational& x) {
  const auto d = x.denominator();
  return (d & (d - 1)) == 0;
}

inline std::uint64_t dyadic_index(const Rational& x) {
  if (!is_dyadic(x)) throw InvalidArgument("not a dyadic rational");
  const auto d = static_cast<std::uint64_t>(x.denominator());
  const auto e = static_cast<std::uint64_t>(std::countr_zero(d));
  if (e == 0) return diag(0, unzigzag(x.numerator()));
  return diag(e, unzigzag((x.numerator() - 1) / 2));
}

/// Positive dyadics: j -> (e', t) = unpair(j); value (2t + 1) * 2^zigzag(e').
inline Rational positive_dyadic_at(std::uint64_t j) {
  const auto [e, t] = unpair(j);
  const auto x = zigzag(e);
  const auto odd = static_cast<std::int64_t>(2 * t + 1);
  if (x >= 0) return Rational(odd * detail::pow2(static_cast<std::uint64_t>(x)));
  return Rational(odd, detail::pow2(static_cast<std::uint64_t>(-x)));
}

inline std::uint64_t positive_dyadic_index(const Rational& w) {
  if (w.numerator() <= 0 || !is_dyadic(w)) throw InvalidArgument("not a positive dyadic rational");
  std::int64_t num = w.numerator();
  std::int64_t x = -static_cast<std::int64_t>(std::countr_zero(static_cast<std::uint64_t>(w.denominator())));
  while (num % 2 == 0) {
    num /= 2;
    ++x;
  }
  return diag(unzigzag(x), static_cast<std::uint64_t>((num - 1) / 2));
}

/// Base element b: (i, j) = unpair(b), interval (dyadic_at(i), dyadic_at(i) + positive_dyadic_at(j)).
inline Interval interval_at(std::uint64_t b) {
  const auto [i, j] = unpair(b);
  const auto lo = dyadic_at(i);
  return {lo, lo + positive_dyadic_at(j)};
}

inline std::uint64_t interval_index(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidArgument("empty interval");
  return diag(dyadic_index(lo), positive_dyadic_index(hi - lo));
}

/// Decides whether the open interval `iv` lies inside the union of `parts`.
inline bool interval_within(const Interval& iv, std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rational cur = iv.lo;
  bool started = false;
  while (cur < iv.hi) {
    bool advanced = false;
    Rational best = cur;
    for (const auto& p : parts) {
      const bool ok = started ? (p.lo < cur) : (p.lo <= cur);
      if (ok && p.hi > best) {
        best = p.hi;
        advanced = true;
      }
    }
    if (!advanced) return false;
    cur = best;
    started = true;
  }
  return true;
}

inline Rational floor(const Rational& x) {
  auto n = x.numerator(), d = x.denominator();
  auto f = n / d;
  if ((n % d != 0) && (n < 0)) --f;
  return Rational(f);
}

inline Rational ceil(const Rational& x) { return -floor(-x); }

}  // namespace topogame::q
