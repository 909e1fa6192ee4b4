#pragma once

// Sequences over F_q, longest common subsequences, insdel distance, increasing
// index sequences and the subsequence-agreement matrix V_{k,l,I,J}.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsid/poly.hpp"

namespace rsid {

using Sequence = std::vector<Elem>;

// Length of a longest common subsequence; O(|a| |b|) time, O(|b|) memory.
inline std::size_t lcs(std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<std::uint32_t> row(b.size() + 1, 0);
  for (auto x : a) {
    std::uint32_t diag = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint32_t up = row[j + 1];
      row[j + 1] = x == b[j] ? diag + 1 : std::max(up, row[j]);
      diag = up;
    }
  }
  return row.back();
}

struct LcsWitness {
  std::size_t length = 0;
  // 1-based positions of one longest common subsequence in each input.
  std::vector<std::uint32_t> left, right;
};

inline LcsWitness lcs_witness(std::span<const Elem> a, std::span<const Elem> b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::uint32_t> t((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return t[i * (m + 1) + j]; };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = a[i - 1] == b[j - 1] ? at(i - 1, j - 1) + 1 : std::max(at(i - 1, j), at(i, j - 1));
  LcsWitness w;
  w.length = at(n, m);
  for (std::size_t i = n, j = m; i > 0 && j > 0;) {
    if (a[i - 1] == b[j - 1]) {
      w.left.push_back(static_cast<std::uint32_t>(i));
      w.right.push_back(static_cast<std::uint32_t>(j));
      --i, --j;
    } else if (at(i - 1, j) >= at(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(w.left.begin(), w.left.end());
  std::reverse(w.right.begin(), w.right.end());
  return w;
}

inline std::size_t edit_distance(std::span<const Elem> a, std::span<const Elem> b) {
  return a.size() + b.size() - 2 * lcs(a, b);
}

// LCS of two sequences that each have pairwise distinct symbols, via the
// longest increasing subsequence of matched positions: O(n log n).
// Scratch buffers are kept between calls.
class DistinctLcs {
 public:
  explicit DistinctLcs(std::uint32_t alphabet) : pos_(alphabet, kAbsent) {}

  // Fixes the first sequence; later calls compare against it.
  void set_reference(std::span<const Elem> a) {
    for (auto v : ref_) pos_[v] = kAbsent;
    ref_.assign(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) pos_[a[i]] = static_cast<std::uint32_t>(i);
  }

  std::size_t operator()(std::span<const Elem> b) {
    tails_.clear();
    for (auto v : b) {
      const std::uint32_t p = pos_[v];
      if (p == kAbsent) continue;
      auto it = std::lower_bound(tails_.begin(), tails_.end(), p);
      if (it == tails_.end())
        tails_.push_back(p);
      else
        *it = p;
    }
    return tails_.size();
  }

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;
  std::vector<std::uint32_t> pos_, tails_;
  std::vector<Elem> ref_;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Strictly increasing vector of 1-based positions in [1, n].
class IncreasingSequence {
 public:
  IncreasingSequence(std::vector<std::uint32_t> indices, std::uint32_t n)
      : idx_(std::move(indices)), n_(n) {
    for (std::size_t t = 0; t < idx_.size(); ++t) {
      if (idx_[t] < 1 || idx_[t] > n_)
        throw PreconditionError("index " + std::to_string(idx_[t]) + " outside [1, " +
                                std::to_string(n_) + "]");
      if (t > 0 && idx_[t] <= idx_[t - 1]) throw PreconditionError("indices not strictly increasing");
    }
  }

  const std::vector<std::uint32_t>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  std::uint32_t ambient() const { return n_; }
  std::uint32_t operator[](std::size_t t) const { return idx_[t]; }

  // The single position of [1, n] not in the sequence; requires size() == n - 1.
  std::uint32_t missing() const {
    if (idx_.size() + 1 != n_) throw PreconditionError("missing(): sequence length must be n - 1");
    for (std::uint32_t t = 0; t < idx_.size(); ++t)
      if (idx_[t] != t + 1) return t + 1;
    return n_;
  }

  friend bool operator==(const IncreasingSequence&, const IncreasingSequence&) = default;

 private:
  std::vector<std::uint32_t> idx_;
  std::uint32_t n_;
};

inline std::size_t hamming_increasing(const IncreasingSequence& a, const IncreasingSequence& b) {
  if (a.size() != b.size()) throw DimensionMismatch("increasing sequences of different lengths");
  std::size_t d = 0;
  for (std::size_t t = 0; t < a.size(); ++t) d += a[t] != b[t];
  return d;
}

// Advances idx to the lexicographically next increasing sequence in [1, n];
// false after the last one.
inline bool next_increasing(std::vector<std::uint32_t>& idx, std::uint32_t n) {
  const std::size_t l = idx.size();
  for (std::size_t t = l; t-- > 0;) {
    if (idx[t] < n - (l - 1 - t)) {
      ++idx[t];
      for (std::size_t u = t + 1; u < l; ++u) idx[u] = idx[u - 1] + 1;
      return true;
    }
  }
  return false;
}

// All C(n, l) increasing sequences of length l in [1, n], lexicographic order.
class IncreasingSequences {
 public:
  IncreasingSequences(std::uint32_t n, std::uint32_t l) : n_(n), l_(l) {
    if (l > n) throw PreconditionError("enumerate_increasing: length exceeds n");
  }

  class iterator {
   public:
    using value_type = IncreasingSequence;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::uint32_t n, std::uint32_t l) : n_(n), cur_(l), done_(false) {
      for (std::uint32_t t = 0; t < l; ++t) cur_[t] = t + 1;
    }
    IncreasingSequence operator*() const { return IncreasingSequence(cur_, n_); }
    iterator& operator++() {
      done_ = !next_increasing(cur_, n_);
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || cur_ == o.cur_); }

   private:
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> cur_;
    bool done_ = true;
  };

  iterator begin() const { return {n_, l_}; }
  iterator end() const { return {}; }
  std::uint64_t count() const { return binomial(n_, l_); }

 private:
  std::uint32_t n_, l_;
};

inline IncreasingSequences enumerate_increasing(std::uint32_t n, std::uint32_t l) { return {n, l}; }

inline std::vector<IncreasingSequence> all_increasing(std::uint32_t n, std::uint32_t l) {
  std::vector<IncreasingSequence> out;
  for (auto s : enumerate_increasing(n, l)) out.push_back(std::move(s));
  return out;
}

// Row t is (1, a_{I_t}, ..., a_{I_t}^{k-1}, a_{J_t}, ..., a_{J_t}^{k-1}).
inline Matrix build_V(const Field& f, std::span<const Elem> alpha, std::size_t k,
                      const IncreasingSequence& I, const IncreasingSequence& J) {
  if (k == 0) throw PreconditionError("build_V: k must be positive");
  if (I.size() != J.size()) throw DimensionMismatch("build_V: |I| != |J|");
  const std::size_t l = I.size();
  for (std::size_t t = 0; t < l; ++t)
    if (I[t] > alpha.size() || J[t] > alpha.size())
      throw DimensionMismatch("build_V: index beyond the evaluation vector");
  Matrix v(f, l, 2 * k - 1);
  for (std::size_t t = 0; t < l; ++t) {
    const Elem x = alpha[I[t] - 1], y = alpha[J[t] - 1];
    v(t, 0) = 1;
    Elem px = 1, py = 1;
    for (std::size_t j = 1; j < k; ++j) {
      px = f.mul(px, x);
      py = f.mul(py, y);
      v(t, j) = px;
      v(t, k - 1 + j) = py;
    }
  }
  return v;
}

}  // namespace rsid
