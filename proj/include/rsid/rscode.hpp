#pragma once

// Evaluation vectors, Reed-Solomon codes and affine equivalence of orderings.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsid/insdel.hpp"

namespace rsid {

// Pairwise distinct evaluation points in one field.
class EvaluationVector {
 public:
  EvaluationVector(Field f, std::vector<Elem> points) : f_(std::move(f)), pts_(std::move(points)) {
    if (pts_.empty()) throw PreconditionError("evaluation vector is empty");
    if (pts_.size() > f_.q()) throw PreconditionError("more evaluation points than field elements");
    std::vector<bool> seen(f_.q(), false);
    for (auto v : pts_) {
      f_.element(v);
      if (seen[v]) throw DuplicateNode("evaluation point " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
  }

  const Field& field() const { return f_; }
  const std::vector<Elem>& points() const { return pts_; }
  std::span<const Elem> span() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  Elem operator[](std::size_t i) const { return pts_[i]; }
  bool is_full_length() const { return pts_.size() == f_.q(); }

  friend bool operator==(const EvaluationVector& a, const EvaluationVector& b) {
    return a.f_ == b.f_ && a.pts_ == b.pts_;
  }

 private:
  Field f_;
  std::vector<Elem> pts_;
};

inline bool is_full_length_ordering(const Field& f, std::span<const Elem> pts) {
  if (pts.size() != f.q()) return false;
  std::vector<bool> seen(f.q(), false);
  for (auto v : pts) {
    if (v >= f.q() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

class RsCode {
 public:
  RsCode(EvaluationVector eval, std::size_t k) : ev_(std::move(eval)), k_(k) {
    if (k_ < 1 || k_ >= ev_.size())
      throw PreconditionError("RS code needs 1 <= k < n (k = " + std::to_string(k_) +
                              ", n = " + std::to_string(ev_.size()) + ")");
  }

  const EvaluationVector& eval() const { return ev_; }
  const Field& field() const { return ev_.field(); }
  std::size_t n() const { return ev_.size(); }
  std::size_t k() const { return k_; }

 private:
  EvaluationVector ev_;
  std::size_t k_;
};

inline Sequence codeword(const RsCode& code, const Polynomial& f) {
  if (f.field() != code.field()) throw FieldMismatch("codeword: polynomial over another field");
  if (f.degree() >= static_cast<int>(code.k()))
    throw PreconditionError("codeword: degree " + std::to_string(f.degree()) + " >= k");
  return eval_vec(f, code.eval().span());
}

// x -> lambda x + mu, lambda != 0.
struct AffineMap {
  Elem lambda = 1;
  Elem mu = 0;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

inline std::vector<Elem> apply(const Field& f, const AffineMap& m, std::span<const Elem> xs) {
  std::vector<Elem> out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(f.add(f.mul(m.lambda, x), m.mu));
  return out;
}

// The map sending a to b coordinatewise, if any. The first two coordinates
// determine it; the rest are checked.
inline std::optional<AffineMap> equivalent(const EvaluationVector& a, const EvaluationVector& b) {
  if (a.field() != b.field()) throw FieldMismatch("equivalent: vectors over different fields");
  if (a.size() != b.size() || a.size() < 2)
    throw PreconditionError("equivalent: vectors must have equal length >= 2");
  const Field& f = a.field();
  AffineMap m;
  m.lambda = f.div(f.sub(b[1], b[0]), f.sub(a[1], a[0]));
  m.mu = f.sub(b[0], f.mul(m.lambda, a[0]));
  for (std::size_t i = 2; i < a.size(); ++i)
    if (f.add(f.mul(m.lambda, a[i]), m.mu) != b[i]) return std::nullopt;
  return m;
}

// Affine map taking the first two coordinates of a to (0, 1).
inline AffineMap canonicalizing_map(const EvaluationVector& a) {
  if (a.size() < 2) throw PreconditionError("canonical_form: need at least two points");
  const Field& f = a.field();
  AffineMap m;
  m.lambda = f.inv(f.sub(a[1], a[0]));
  m.mu = f.neg(f.mul(m.lambda, a[0]));
  return m;
}

inline EvaluationVector canonical_form(const EvaluationVector& a) {
  return EvaluationVector(a.field(), apply(a.field(), canonicalizing_map(a), a.span()));
}

// ---- text format: "GF(p^m):i1,i2,..." ------------------------------------

namespace detail {

inline std::uint64_t parse_uint(std::string_view s, const char* what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

// Accepts "7", "81", "3^4", "GF(7)", "GF(3^4)".
inline Field parse_field(std::string_view s) {
  if (s.starts_with("GF(") && s.ends_with(")")) s = s.substr(3, s.size() - 4);
  try {
    if (auto caret = s.find('^'); caret != std::string_view::npos) {
      const auto p = detail::parse_uint(s.substr(0, caret), "field characteristic");
      const auto m = detail::parse_uint(s.substr(caret + 1), "extension degree");
      if (p > kMaxFieldOrder || m > 64) throw FieldTooLarge("field too large");
      return Field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    }
    const auto q = detail::parse_uint(s, "field order");
    if (q > kMaxFieldOrder) throw FieldTooLarge("field order exceeds 2^20");
    return Field::of_order(q);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid field '") + std::string(s) + "': " + e.what());
  }
}

inline std::string format_field(const Field& f) {
  return "GF(" + std::to_string(f.p()) + (f.m() == 1 ? "" : "^" + std::to_string(f.m())) + ")";
}

inline std::vector<Elem> parse_index_list(const Field& f, std::string_view s) {
  std::vector<Elem> out;
  while (true) {
    const auto comma = s.find(',');
    const auto v = detail::parse_uint(s.substr(0, comma), "element index");
    if (!f.contains(v))
      throw ParseError(std::to_string(v) + " is not an element of " + format_field(f));
    out.push_back(static_cast<Elem>(v));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string format_index_list(std::span<const Elem> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

inline std::string format_evaluation_vector(const EvaluationVector& a) {
  return format_field(a.field()) + ":" + format_index_list(a.span());
}

inline EvaluationVector parse_evaluation_vector(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos || !s.starts_with("GF("))
    throw ParseError("evaluation vector must look like GF(p^m):i1,i2,...");
  Field f = parse_field(s.substr(0, colon));
  auto pts = parse_index_list(f, s.substr(colon + 1));
  try {
    return EvaluationVector(f, std::move(pts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace rsid
