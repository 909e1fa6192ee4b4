#pragma once

// Finite fields F_q, q = p^m, with elements encoded as canonical integer
// indices. For m > 1 the index of a residue c_0 + c_1 x + ... + c_{m-1} x^{m-1}
// is c_0 + c_1 p + ... + c_{m-1} p^{m-1}.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsid/error.hpp"

namespace rsid {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxTabulatedOrder = std::uint64_t{1} << 16;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Prime factors of n, ascending, without multiplicity.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// (p, m) with q = p^m, or nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  std::uint32_t m = 0;
  for (std::uint64_t r = q; r > 1; r /= f[0]) ++m;
  return std::pair{static_cast<std::uint32_t>(f[0]), m};
}

inline bool is_prime_power(std::uint64_t q) { return prime_power(q).has_value(); }

inline std::uint64_t smallest_prime_power_at_least(std::uint64_t n) {
  for (std::uint64_t q = n < 2 ? 2 : n;; ++q)
    if (is_prime_power(q)) return q;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw PreconditionError("euler_phi: n must be positive");
  std::uint64_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

namespace detail {

// Dense polynomials over F_p, low degree first; used only while building a field.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over F_p; b nonzero.
inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of idx.
inline PrimePoly monic_from_index(std::uint64_t idx, std::uint32_t d, std::uint32_t p) {
  PrimePoly f(d + 1, 0);
  for (std::uint32_t i = 0; i < d; ++i, idx /= p) f[i] = static_cast<std::uint32_t>(idx % p);
  f[d] = 1;
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

// Lexicographically least monic irreducible of degree m (ordered by the
// index of its lower coefficients).
inline PrimePoly least_irreducible(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto f = monic_from_index(idx, m, p);
    if (is_irreducible(f, p)) return f;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

}  // namespace detail

// Immutable description of F_q plus the lookup tables used for arithmetic.
// Copies share the tables.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t m = 1) : d_(build(p, m)) {}

  static Field of_order(std::uint64_t q) {
    auto pm = prime_power(q);
    if (!pm) throw NonPrime("field order " + std::to_string(q) + " is not a prime power");
    return Field(pm->first, pm->second);
  }

  std::uint32_t p() const { return d_->p; }
  std::uint32_t m() const { return d_->m; }
  std::uint32_t q() const { return d_->q; }
  bool is_prime_field() const { return d_->m == 1; }
  // Monic modulus, low degree first; {0, 1} (i.e. x) for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  std::string name() const {
    if (d_->m == 1) return "GF(" + std::to_string(d_->p) + ")";
    return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->m) + ")";
  }

  bool operator==(const Field& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->m == o.d_->m && d_->modulus == o.d_->modulus);
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  bool contains(std::uint64_t v) const { return v < d_->q; }

  Elem element(std::uint64_t v) const {
    if (v >= d_->q)
      throw PreconditionError(std::to_string(v) + " is not an element index of " + name());
    return static_cast<Elem>(v);
  }

  // n * 1 in the field.
  Elem from_integer(std::int64_t n) const {
    const std::int64_t p = d_->p;
    return static_cast<Elem>(((n % p) + p) % p);
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    const Data& d = *d_;
    if (d.m == 1) {
      Elem s = a + b;
      return s >= d.p ? s - d.p : s;
    }
    if (d.p == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    if (d.tables) {
      // Zech logarithm: a + b = a (1 + b/a).
      std::uint32_t diff = d.log[b] + d.q - 1 - d.log[a];
      if (diff >= d.q - 1) diff -= d.q - 1;
      if (diff == d.neg_one_log) return 0;
      return d.exp[d.log[a] + d.zech[diff]];
    }
    return digitwise(a, b, false);
  }

  Elem neg(Elem a) const {
    const Data& d = *d_;
    if (a == 0) return 0;
    if (d.m == 1) return d.p - a;
    if (d.p == 2) return a;
    if (d.tables) return d.exp[d.log[a] + d.neg_one_log];
    return digitwise(0, a, true);
  }

  Elem sub(Elem a, Elem b) const {
    if (d_->m == 1) return a >= b ? a - b : a + d_->p - b;
    return add(a, neg(b));
  }

  Elem mul(Elem a, Elem b) const {
    const Data& d = *d_;
    if (d.m == 1) return static_cast<Elem>(std::uint64_t{a} * b % d.p);
    if (a == 0 || b == 0) return 0;
    if (d.tables) return d.exp[d.log[a] + d.log[b]];
    return slow_mul(a, b);
  }

  Elem inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + name());
    const Data& d = *d_;
    if (d.m == 1) return detail::inv_mod(a, d.p);
    if (d.tables) return d.exp[(d.q - 1 - d.log[a]) % (d.q - 1)];
    return pow(a, d.q - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    for (Elem b = a; e; e >>= 1, b = mul(b, b))
      if (e & 1) r = mul(r, b);
    return r;
  }

  // Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const {
    if (a == 0) throw DivisionByZero("order of zero");
    std::uint64_t n = d_->q - 1;
    for (auto r : prime_factors(d_->q - 1))
      while (n % r == 0 && pow(a, n / r) == 1) n /= r;
    return n;
  }

 private:
  struct Data {
    std::uint32_t p = 0, m = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    bool tables = false;
    std::vector<std::uint32_t> log, exp, zech;  // exp has 2(q-1) entries
    std::uint32_t neg_one_log = 0;
  };

  static std::shared_ptr<const Data> build(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
    if (m == 0) throw PreconditionError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      q *= p;
      if (q > kMaxFieldOrder)
        throw FieldTooLarge("field order exceeds 2^20");
    }
    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = static_cast<std::uint32_t>(q);
    d->modulus = m == 1 ? std::vector<std::uint32_t>{0, 1} : detail::least_irreducible(p, m);
    if (m > 1 && q <= kMaxTabulatedOrder) build_tables(*d);
    return d;
  }

  static std::vector<std::uint32_t> digits(const Data& d, Elem a) {
    std::vector<std::uint32_t> out(d.m);
    for (std::uint32_t i = 0; i < d.m; ++i, a /= d.p) out[i] = a % d.p;
    return out;
  }

  static Elem undigits(const Data& d, const std::vector<std::uint32_t>& c) {
    Elem v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * d.p + c[i];
    return v;
  }

  static Elem poly_mul(const Data& d, Elem a, Elem b) {
    auto x = digits(d, a), y = digits(d, b);
    detail::PrimePoly prod(2 * d.m - 1, 0);
    for (std::uint32_t i = 0; i < d.m; ++i)
      for (std::uint32_t j = 0; j < d.m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % d.p);
    auto r = detail::poly_mod(std::move(prod), d.modulus, d.p);
    r.resize(d.m, 0);
    return undigits(d, r);
  }

  static void build_tables(Data& d) {
    const std::uint32_t n = d.q - 1;
    Elem gen = 0;
    for (Elem g = 2; g < d.q && gen == 0; ++g) {
      // g generates F_q^* iff g^{n/r} != 1 for each prime r | n.
      bool ok = true;
      for (auto r : prime_factors(n)) {
        Elem acc = 1, b = g;
        for (std::uint64_t e = n / r; e; e >>= 1, b = poly_mul(d, b, b))
          if (e & 1) acc = poly_mul(d, acc, b);
        if (acc == 1) { ok = false; break; }
      }
      if (ok) gen = g;
    }
    if (n == 1) gen = 1;
    d.log.assign(d.q, 0);
    d.exp.assign(2 * std::size_t{n}, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      d.exp[i] = d.exp[i + n] = x;
      d.log[x] = i;
      x = poly_mul(d, x, gen);
    }
    d.neg_one_log = d.p == 2 ? 0 : n / 2;
    d.zech.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      // 1 + g^i; undefined when g^i = -1 (sum is zero, handled by the caller).
      auto c = digits(d, d.exp[i]);
      c[0] = (c[0] + 1) % d.p;
      Elem s = undigits(d, c);
      d.zech[i] = s == 0 ? 0 : d.log[s];
    }
    d.tables = true;
  }

  Elem digitwise(Elem a, Elem b, bool negate_b) const {
    const Data& d = *d_;
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < d.m; ++i, a /= d.p, b /= d.p, scale *= d.p) {
      std::uint32_t db = b % d.p;
      if (negate_b) db = (d.p - db) % d.p;
      out += ((a % d.p + db) % d.p) * scale;
    }
    return out;
  }

  Elem slow_mul(Elem a, Elem b) const { return poly_mul(*d_, a, b); }

  std::shared_ptr<const Data> d_;
};

// A field element that remembers its field; arithmetic between elements of
// different fields throws FieldMismatch. Hot loops use Field and Elem directly.
class FieldElement {
 public:
  FieldElement(Field f, std::uint64_t v) : f_(std::move(f)), v_(f_.element(v)) {}

  const Field& field() const { return f_; }
  Elem value() const { return v_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.f_, a.f_.add(a.v_, b.v_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.f_, a.f_.sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.f_, a.f_.mul(a.v_, b.v_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.f_, a.f_.div(a.v_, b.v_)};
  }
  FieldElement operator-() const { return {f_, f_.neg(v_)}; }
  FieldElement inv() const { return {f_, f_.inv(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {f_, f_.pow(v_, e)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (a.f_ != b.f_)
      throw FieldMismatch("operands from " + a.f_.name() + " and " + b.f_.name());
  }

  Field f_;
  Elem v_;
};

// All elements of multiplicative order q - 1, ascending.
inline std::vector<Elem> primitive_elements(const Field& f) {
  std::vector<Elem> out;
  const auto factors = prime_factors(f.q() - 1);
  for (Elem a = 1; a < f.q(); ++a) {
    bool ok = true;
    for (auto r : factors)
      if (f.pow(a, (f.q() - 1) / r) == 1) { ok = false; break; }
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace rsid
