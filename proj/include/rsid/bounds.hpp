#pragma once

// Counting bounds for insdel-correcting RS codes: exact big integers, and
// 250-bit log-space values where the quantities are astronomically small.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "rsid/analyze.hpp"

namespace rsid {

using BigInt = boost::multiprecision::cpp_int;
using LogReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<250, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
inline constexpr unsigned kLogPrecisionBits = 250;

// Most insdel errors an [n, k] linear code can correct.
inline std::size_t half_singleton(std::size_t n, std::size_t k) {
  if (k == 0 || k >= n) throw PreconditionError("half_singleton: need 1 <= k < n");
  return n + 1 >= 2 * k ? n - 2 * k + 1 : 0;
}

inline BigInt big_factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Classes of full-length 2-dimensional codes guaranteed to correct one insdel:
// (q-2)! - 2 phi(q-1) - [q prime], clamped at 0. Equivalences among the bad
// vectors are not subtracted, so this can undercount.
inline BigInt prop7_lower_bound_classes(std::uint64_t q) {
  if (q < 4 || !is_prime_power(q)) throw PreconditionError("prop7_lower_bound_classes: q must be a prime power >= 4");
  BigInt v = big_factorial(q - 2);
  const BigInt sub = BigInt(2 * euler_phi(q - 1)) + (is_prime(q) ? 1 : 0);
  return v > sub ? BigInt(v - sub) : BigInt(0);
}

// Number of distinct affine classes among the explicit bad orderings: two per
// primitive element plus the arithmetic progression for prime q.
inline std::uint64_t exact_bad_class_count(const Field& f) {
  if (f.q() < 4) throw PreconditionError("exact_bad_class_count: q must be at least 4");
  const BadOrderingClassifier cls(f);
  std::vector<std::vector<Elem>> canon;
  for (const auto& ref : cls.references())
    canon.push_back(canonical_form(EvaluationVector(f, ref.points)).points());
  std::sort(canon.begin(), canon.end());
  return static_cast<std::uint64_t>(std::unique(canon.begin(), canon.end()) - canon.begin());
}

// sum_{s=l+1}^{min(2l, q)} C(q,s) C(s,l)^2 (q-s)! (q-1) q prod_{i=0}^{s-l-1} (q-i):
// an upper count of orderings of F_q whose 2-dimensional code has LCS >= l.
inline BigInt prop6_bad_ordering_bound(std::uint64_t q, std::uint64_t l) {
  if (l < 1 || l > q) throw PreconditionError("prop6_bad_ordering_bound: need 1 <= l <= q");
  BigInt sum = 0;
  for (std::uint64_t s = l + 1; s <= std::min(2 * l, q); ++s) {
    const BigInt c = big_binomial(s, l);
    BigInt term = big_binomial(q, s) * c * c * big_factorial(q - s) * (q - 1) * q;
    for (std::uint64_t i = 0; i + l < s; ++i) term *= q - i;
    sum += term;
  }
  return sum;
}

// Orderings guaranteed to give LCS(C) <= l - 1, clamped at 0.
inline BigInt prop6_good_orderings(std::uint64_t q, std::uint64_t l) {
  const BigInt f = big_factorial(q), bad = prop6_bad_ordering_bound(q, l);
  return f > bad ? BigInt(f - bad) : BigInt(0);
}

inline LogReal log_of(const BigInt& v) { return boost::multiprecision::log(LogReal(v)); }

struct Claim8Result {
  std::uint64_t q = 0;
  double delta = 0;
  std::uint64_t l = 0;  // floor(delta q)
  bool in_regime = false;
  // ln(bad sum / q!) and ln(q^2 (4e^2 / (d^2 q))^{dq}) with d = l / q.
  std::optional<LogReal> log_lhs, log_rhs;
  std::optional<bool> holds;
};

inline Claim8Result claim8_bound(std::uint64_t q, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw PreconditionError("claim8_bound: delta must lie in (0, 1)");
  if (q < 2) throw PreconditionError("claim8_bound: q must be at least 2");
  Claim8Result r;
  r.q = q;
  r.delta = delta;
  r.l = static_cast<std::uint64_t>(std::floor(delta * static_cast<double>(q) + 1e-9));
  r.in_regime = r.l >= 1;
  if (!r.in_regime) return r;

  const BigInt sum = prop6_bad_ordering_bound(q, r.l);
  const LogReal lq = boost::multiprecision::log(LogReal(q));
  const LogReal dq = LogReal(r.l);
  const LogReal d = dq / LogReal(q);
  r.log_rhs = 2 * lq + dq * (boost::multiprecision::log(LogReal(4)) + 2 - 2 * boost::multiprecision::log(d) - lq);
  if (sum == 0) {
    r.holds = true;  // empty sum: nothing to bound
    return r;
  }
  r.log_lhs = log_of(sum) - log_of(big_factorial(q));
  r.holds = *r.log_lhs <= *r.log_rhs;
  return r;
}

// Decimal rendering of a log-space value with the given number of significant digits.
inline std::string format_log(const LogReal& v, int digits = 30) { return v.str(digits); }

}  // namespace rsid
