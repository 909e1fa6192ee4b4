#pragma once

// Univariate polynomials and dense linear algebra over F_q.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsid/gf.hpp"

namespace rsid {

class Polynomial {
 public:
  explicit Polynomial(Field f) : f_(std::move(f)) {}
  Polynomial(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (auto v : c_) f_.element(v);
    trim();
  }

  static Polynomial constant(Field f, Elem c) { return Polynomial(std::move(f), {c}); }
  static Polynomial monomial(Field f, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(std::move(f), std::move(v));
  }
  static Polynomial identity(Field f) { return monomial(std::move(f), 1, 1); }

  const Field& field() const { return f_; }
  // Low degree first, no trailing zeros; empty for the zero polynomial.
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Elem operator()(Elem x) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.f_.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.f_, std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.f_.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.f_, std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.f_);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = a.f_.add(r[i + j], a.f_.mul(a.c_[i], b.c_[j]));
    return Polynomial(a.f_, std::move(r));
  }
  Polynomial scaled(Elem s) const {
    std::vector<Elem> r(c_);
    for (auto& v : r) v = f_.mul(v, s);
    return Polynomial(f_, std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  static void check(const Polynomial& a, const Polynomial& b) {
    if (a.f_ != b.f_) throw FieldMismatch("polynomials over different fields");
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Field f_;
  std::vector<Elem> c_;
};

inline Elem eval(const Polynomial& f, Elem x) { return f(x); }

inline std::vector<Elem> eval_vec(const Polynomial& f, std::span<const Elem> xs) {
  std::vector<Elem> out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(f(x));
  return out;
}

// Unique polynomial of degree < k through all points, if one exists.
// Lagrange interpolation on the first k points, then the remaining points are checked.
inline std::optional<Polynomial> interpolate(const Field& f,
                                             std::span<const std::pair<Elem, Elem>> points,
                                             std::size_t k) {
  if (points.size() < k) throw PreconditionError("interpolate: fewer points than k");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DuplicateNode("interpolate: repeated node " + std::to_string(points[i].first));
  Polynomial acc(f);
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial basis = Polynomial::constant(f, 1);
    Elem denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(f, {f.neg(points[j].first), 1});
      denom = f.mul(denom, f.sub(points[i].first, points[j].first));
    }
    acc = acc + basis.scaled(f.div(points[i].second, denom));
  }
  for (std::size_t i = k; i < points.size(); ++i)
    if (acc(points[i].first) != points[i].second) return std::nullopt;
  return acc;
}

// All roots in F_q by exhaustive scan, ascending.
inline std::vector<Elem> roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  std::vector<Elem> out;
  if (p.degree() == 0) return out;
  const auto q = p.field().q();
  for (Elem x = 0; x < q; ++x)
    if (p(x) == 0) {
      out.push_back(x);
      if (out.size() == static_cast<std::size_t>(p.degree())) break;
    }
  return out;
}

// The values of a polynomial at every element of F_q, with preimages indexed so
// that roots of p - v can be read off for any v. Equivalent to one exhaustive
// root scan per queried v, sharing a single pass over the field.
class ValueTable {
 public:
  ValueTable() = default;
  explicit ValueTable(const Polynomial& p) { reset(p); }

  void reset(const Polynomial& p) {
    const auto q = p.field().q();
    values_.resize(q);
    for (Elem x = 0; x < q; ++x) values_[x] = p(x);
    start_.assign(std::size_t{q} + 1, 0);
    for (auto v : values_) ++start_[v + 1];
    for (std::size_t v = 0; v < q; ++v) start_[v + 1] += start_[v];
    order_.resize(q);
    fill_ = std::vector<std::uint32_t>(start_.begin(), start_.end() - 1);
    for (Elem x = 0; x < q; ++x) order_[fill_[values_[x]]++] = x;
  }

  Elem value(Elem x) const { return values_[x]; }
  const std::vector<Elem>& values() const { return values_; }

  // Roots of p - v, ascending.
  std::span<const Elem> preimage(Elem v) const {
    return {order_.data() + start_[v], order_.data() + start_[v + 1]};
  }

 private:
  std::vector<Elem> values_;
  std::vector<std::uint32_t> start_, fill_;
  std::vector<Elem> order_;
};

class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}
  Matrix(Field f, std::vector<std::vector<Elem>> rows) : f_(std::move(f)) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows[0].size();
    e_.reserve(rows_ * cols_);
    for (auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
      for (auto v : r) e_.push_back(f_.element(v));
    }
  }

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {e_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {e_.data() + r * cols_, cols_}; }

  std::vector<Elem> apply(std::span<const Elem> x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Elem> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) y[r] = f_.add(y[r], f_.mul((*this)(r, c), x[c]));
    return y;
  }

  // In-place reduced row echelon form; returns the pivot column of each pivot row.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(sel, j));
      const Elem s = f_.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = f_.mul((*this)(r, j), s);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        const Elem t = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) = f_.sub((*this)(i, j), f_.mul(t, (*this)(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> e_;
};

inline std::size_t rank(Matrix a) { return a.reduce().size(); }

struct LinearSolution {
  enum class Kind { Unique, None, Underdetermined };
  Kind kind = Kind::None;
  std::vector<Elem> solution;             // a particular solution unless kind == None
  std::vector<std::vector<Elem>> kernel;  // basis of the null space
};

inline LinearSolution solve_linear(const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve_linear: right-hand side size");
  const Field& f = a.field();
  const std::size_t n = a.cols();
  Matrix aug(f, a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = aug.reduce();
  LinearSolution out;
  if (!pivots.empty() && pivots.back() == n) return out;  // inconsistent

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  out.solution.assign(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = aug(i, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(aug(i, free));
    out.kernel.push_back(std::move(v));
  }
  out.kind = out.kernel.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Underdetermined;
  return out;
}

}  // namespace rsid
