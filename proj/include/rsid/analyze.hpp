#pragma once

// Insdel capability of RS codes: exact LCS(C) by exhaustive codeword pairs,
// the k = 2 full-length fast path, the rate-1/2 optimality check, the
// classification of orderings that cannot correct one insdel, and the
// census / sampling experiments built on them.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rsid/certificate.hpp"
#include "rsid/parallel.hpp"
#include "rsid/rscode.hpp"

namespace rsid {

enum class Method { BruteForce, AffineFastPath, NormalizedEnumeration, RankCertificate };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::BruteForce: return "BruteForce";
    case Method::AffineFastPath: return "AffineFastPath";
    case Method::NormalizedEnumeration: return "NormalizedEnumeration";
    case Method::RankCertificate: return "RankCertificate";
  }
  return "?";
}

// f(alpha_I) = g(alpha_J) with f != g.
struct PairWitness {
  Polynomial f, g;
  IncreasingSequence I, J;
};

struct AnalysisReport {
  std::size_t n = 0, k = 0;
  std::size_t lcs_of_code = 0;
  std::size_t max_correctable = 0;  // n - 1 - lcs_of_code
  bool optimal = false;             // max_correctable == max(n - 2k + 1, 0)
  std::optional<PairWitness> witness;
  Method method = Method::BruteForce;
};

struct AnalyzeOptions {
  unsigned threads = default_threads();
  std::uint64_t max_codewords = 20'000;
  // Limit on (normalized f, (I, J)) combinations for is_optimal_half_rate.
  std::uint64_t max_enumeration = 2'000'000'000;
};

namespace detail {

// The half-Singleton bound LCS(C) >= 2k - 2 holds for every linear code with
// n >= 2k - 1 (below that, LCS(C) = n - 1), so a smaller value means the
// computation is wrong.
inline AnalysisReport make_report(std::size_t n, std::size_t k, std::size_t lcs_value, Method m,
                                  std::optional<PairWitness> w) {
  const std::size_t floor = std::min(2 * k - 2, n - 1);
  if (lcs_value < floor || lcs_value + 1 > n)
    throw InvariantViolation("LCS(C) = " + std::to_string(lcs_value) + " outside [" + std::to_string(floor) +
                             ", n-1] for n = " + std::to_string(n) + ", k = " + std::to_string(k));
  AnalysisReport r;
  r.n = n;
  r.k = k;
  r.lcs_of_code = lcs_value;
  r.max_correctable = n - 1 - lcs_value;
  r.optimal = r.max_correctable + floor + 1 == n;
  r.witness = std::move(w);
  r.method = m;
  return r;
}

inline std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

inline Polynomial poly_from_index(const Field& f, std::uint64_t idx, std::size_t k) {
  std::vector<Elem> c(k);
  for (std::size_t i = 0; i < k; ++i, idx /= f.q()) c[i] = static_cast<Elem>(idx % f.q());
  return Polynomial(f, std::move(c));
}

// Members of the normalized family {f_0 = 0, f_{k-1} in {0, 1}}, indexed
// 0 .. 2 q^{k-2} - 1 (k >= 2). Index u < q^{k-2} has f_{k-1} = 0; the base-q
// digits of u mod q^{k-2} are f_1, ..., f_{k-2}.
inline Polynomial normalized_member(const Field& f, std::uint64_t u, std::size_t k) {
  std::uint64_t half = 1;
  for (std::size_t i = 2; i < k; ++i) half *= f.q();
  std::vector<Elem> c(k, 0);
  c[k - 1] = u >= half ? 1 : 0;
  u %= half;
  for (std::size_t i = 1; i + 1 < k; ++i, u /= f.q()) c[i] = static_cast<Elem>(u % f.q());
  return Polynomial(f, std::move(c));
}

inline IncreasingSequence to_increasing(const std::vector<std::uint32_t>& idx, std::size_t n) {
  return IncreasingSequence(idx, static_cast<std::uint32_t>(n));
}

}  // namespace detail

// Exact LCS(C) over all pairs of distinct codewords. Affine isometries let the
// first codeword range over the normalized family only.
inline AnalysisReport lcs_code_bruteforce(const RsCode& code, const AnalyzeOptions& opt = {}) {
  const Field& f = code.field();
  const std::size_t n = code.n(), k = code.k();
  const std::uint64_t total = detail::checked_power(f.q(), k, opt.max_codewords);
  if (total > opt.max_codewords)
    throw GuardExceeded("q^k codewords exceed the limit of " + std::to_string(opt.max_codewords));

  std::vector<Elem> words(total * n);
  for (std::uint64_t c = 0; c < total; ++c) {
    const auto p = detail::poly_from_index(f, c, k);
    for (std::size_t i = 0; i < n; ++i) words[c * n + i] = p(code.eval()[i]);
  }
  auto word = [&](std::uint64_t c) { return std::span<const Elem>(words.data() + c * n, n); };

  std::vector<std::uint64_t> family;
  if (k == 1) {
    family.push_back(0);
  } else {
    const std::uint64_t top = total / f.q();  // weight of f_{k-1}
    for (std::uint64_t c = 0; c < total; ++c)
      if (c % f.q() == 0 && c / top <= 1) family.push_back(c);
  }

  struct Best {
    std::size_t value = 0;
    std::uint64_t flat = ~std::uint64_t{0};
  };
  const std::uint64_t work = family.size() * total;
  std::vector<Best> best(worker_count(work, opt.threads));
  parallel_chunks(work, opt.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::uint64_t x = begin; x < end; ++x) {
      const std::uint64_t fc = family[x / total], gc = x % total;
      if (fc == gc) continue;
      const std::size_t v = lcs(word(fc), word(gc));
      if (best[w].flat == ~std::uint64_t{0} || v > best[w].value) best[w] = {v, x};
    }
  });
  Best b;
  for (auto& c : best)
    if (c.flat != ~std::uint64_t{0} && (b.flat == ~std::uint64_t{0} || c.value > b.value)) b = c;

  const std::uint64_t fc = family[b.flat / total], gc = b.flat % total;
  const auto lw = lcs_witness(word(fc), word(gc));
  PairWitness w{detail::poly_from_index(f, fc, k), detail::poly_from_index(f, gc, k),
                detail::to_increasing(lw.left, n), detail::to_increasing(lw.right, n)};
  return detail::make_report(n, k, b.value, Method::BruteForce, std::move(w));
}

struct AffineBest {
  std::size_t lcs = 0;
  Elem a = 1, b = 0;
};

// max over (A, B) != (1, 0), A != 0 of LCS(alpha, A alpha + B) for a full-length
// ordering, lexicographically first (A, B) on ties. When stop_at is reached the
// scan ends early.
inline AffineBest affine_scan(const Field& f, std::span<const Elem> alpha, DistinctLcs& scratch,
                              std::size_t stop_at = ~std::size_t{0}) {
  scratch.set_reference(alpha);
  std::vector<Elem> c(alpha.size());
  AffineBest best;
  bool any = false;
  for (Elem a = 1; a < f.q(); ++a) {
    for (Elem b = 0; b < f.q(); ++b) {
      if (a == 1 && b == 0) continue;
      for (std::size_t i = 0; i < alpha.size(); ++i) c[i] = f.add(f.mul(a, alpha[i]), b);
      const std::size_t v = scratch(c);
      if (!any || v > best.lcs) {
        best = {v, a, b};
        any = true;
        if (v >= stop_at) return best;
      }
    }
  }
  return best;
}

// LCS(C) of the 2-dimensional full-length code on an ordering of F_q. Pairs
// involving a constant codeword share at most one symbol with a permutation.
inline AnalysisReport lcs_code_affine(const EvaluationVector& alpha) {
  if (!alpha.is_full_length()) throw PreconditionError("lcs_code_affine: evaluation vector is not full-length");
  const Field& f = alpha.field();
  DistinctLcs scratch(f.q());
  const auto best = affine_scan(f, alpha.span(), scratch);
  const std::size_t value = std::max<std::size_t>(best.lcs, 1);
  const std::vector<Elem> c = apply(f, AffineMap{best.a, best.b}, alpha.span());
  const auto lw = lcs_witness(alpha.span(), c);
  PairWitness w{Polynomial::identity(f), Polynomial(f, {best.b, best.a}), detail::to_increasing(lw.left, f.q()),
                detail::to_increasing(lw.right, f.q())};
  return detail::make_report(f.q(), 2, value, Method::AffineFastPath, std::move(w));
}

// Exact LCS(C) by the cheapest applicable method.
inline AnalysisReport lcs_code(const RsCode& code, const AnalyzeOptions& opt = {}) {
  if (code.k() == 2 && code.eval().is_full_length()) return lcs_code_affine(code.eval());
  return lcs_code_bruteforce(code, opt);
}

// LCS(C) <= n - t - 1.
inline bool corrects(const RsCode& code, std::size_t t, const AnalyzeOptions& opt = {}) {
  if (t == 0) return true;
  if (t >= code.n()) return false;
  return lcs_code(code, opt).lcs_of_code + t + 1 <= code.n();
}

struct OptimalityResult {
  bool optimal = false;
  std::optional<PairWitness> witness;
  std::uint64_t family_size = 0;
  std::uint64_t index_pairs = 0;
};

// RS_{2k,k}(alpha) is optimal iff no normalized f and g != f of degree < k
// satisfy f(alpha_I) = g(alpha_J) for increasing I, J in [2k]^{2k-1}. For each
// ordered pair I != J and each f, g is interpolated through the first k points
// (alpha_{J_t}, f(alpha_{I_t})) and the remaining k - 1 are checked.
inline OptimalityResult is_optimal_half_rate(const EvaluationVector& alpha, std::size_t k,
                                             const AnalyzeOptions& opt = {}) {
  if (k < 2) throw PreconditionError("is_optimal_half_rate: k must be at least 2");
  if (alpha.size() != 2 * k) throw PreconditionError("is_optimal_half_rate: need n = 2k");
  const Field& f = alpha.field();
  const std::size_t n = 2 * k, l = 2 * k - 1;

  const auto seqs = all_increasing(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(l));
  struct PairData {
    std::size_t i, j;
    std::vector<Elem> weights;  // (k - 1) x k Lagrange weights
  };
  std::vector<PairData> pairs;
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      // I = J is impossible: f = g on 2k - 1 >= k distinct points forces f = g.
      if (i == j) continue;
      PairData pd{i, j, std::vector<Elem>((k - 1) * k)};
      const auto& J = seqs[j];
      for (std::size_t t = k; t < l; ++t) {
        const Elem x = alpha[J[t] - 1];
        for (std::size_t s = 0; s < k; ++s) {
          Elem num = 1, den = 1;
          for (std::size_t r = 0; r < k; ++r) {
            if (r == s) continue;
            num = f.mul(num, f.sub(x, alpha[J[r] - 1]));
            den = f.mul(den, f.sub(alpha[J[s] - 1], alpha[J[r] - 1]));
          }
          pd.weights[(t - k) * k + s] = f.div(num, den);
        }
      }
      pairs.push_back(std::move(pd));
    }

  const std::uint64_t family = 2 * detail::checked_power(f.q(), k - 2, opt.max_enumeration);
  if (family > opt.max_enumeration || family * pairs.size() > opt.max_enumeration)
    throw GuardExceeded("is_optimal_half_rate: enumeration exceeds the limit of " +
                        std::to_string(opt.max_enumeration));

  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> best{kNone};
  std::vector<std::uint64_t> found(worker_count(family, opt.threads), kNone);
  parallel_chunks(family, opt.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    std::vector<Elem> vals(n), y(l);
    for (std::uint64_t u = begin; u < end; ++u) {
      if (u > best.load(std::memory_order_relaxed)) return;
      const auto fu = detail::normalized_member(f, u, k);
      for (std::size_t i = 0; i < n; ++i) vals[i] = fu(alpha[i]);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& pd = pairs[p];
        const auto& I = seqs[pd.i];
        for (std::size_t t = 0; t < l; ++t) y[t] = vals[I[t] - 1];
        bool match = true;
        for (std::size_t t = k; t < l && match; ++t) {
          Elem acc = 0;
          for (std::size_t s = 0; s < k; ++s) acc = f.add(acc, f.mul(pd.weights[(t - k) * k + s], y[s]));
          match = acc == y[t];
        }
        if (!match) continue;
        std::vector<std::pair<Elem, Elem>> pts;
        for (std::size_t t = 0; t < k; ++t) pts.emplace_back(alpha[seqs[pd.j][t] - 1], y[t]);
        const auto g = interpolate(f, pts, k);
        if (!g || *g == fu) continue;
        found[w] = u * pairs.size() + p;
        std::uint64_t cur = best.load();
        while (u < cur && !best.compare_exchange_weak(cur, u)) {
        }
        return;
      }
    }
  });

  OptimalityResult out;
  out.family_size = family;
  out.index_pairs = pairs.size();
  const auto first = *std::min_element(found.begin(), found.end());
  out.optimal = first == kNone;
  if (!out.optimal) {
    const auto u = first / pairs.size();
    const auto& pd = pairs[first % pairs.size()];
    const auto fu = detail::normalized_member(f, u, k);
    std::vector<std::pair<Elem, Elem>> pts;
    for (std::size_t t = 0; t < k; ++t) pts.emplace_back(alpha[seqs[pd.j][t] - 1], fu(alpha[seqs[pd.i][t] - 1]));
    out.witness = PairWitness{fu, *interpolate(f, pts, k), seqs[pd.i], seqs[pd.j]};
  }
  return out;
}

// (0, 1, a1, a2) gives an optimal RS_{4,2} code iff
// a2 not in {0, 1, a1, a1^2, a1^2 - a1 + 1} and a2 (a1 - 2) != -1.
inline bool predicate_rs42(const Field& f, Elem a1, Elem a2) {
  f.element(a1);
  f.element(a2);
  if (a1 == 0 || a1 == 1) throw PreconditionError("predicate_rs42: a1 must differ from 0 and 1");
  if (a2 == 0 || a2 == 1 || a2 == a1) throw PreconditionError("predicate_rs42: a2 must differ from 0, 1 and a1");
  const Elem sq = f.mul(a1, a1);
  if (a2 == sq || a2 == f.add(f.sub(sq, a1), 1)) return false;
  const Elem shifted = f.sub(a1, f.from_integer(2));
  if (shifted != 0 && f.mul(a2, shifted) == f.neg(1)) return false;
  return true;
}

enum class BadReason { NotBad, Geometric, ReversedGeometric, ArithmeticProgression };

inline const char* to_string(BadReason r) {
  switch (r) {
    case BadReason::NotBad: return "NotBad";
    case BadReason::Geometric: return "Geometric";
    case BadReason::ReversedGeometric: return "ReversedGeometric";
    case BadReason::ArithmeticProgression: return "ArithmeticProgression";
  }
  return "?";
}

struct BadOrderingVerdict {
  bool bad = false;
  BadReason reason = BadReason::NotBad;
  // alpha = lambda * reference + mu, where the reference is built from theta
  // (theta = 0 for the arithmetic progression).
  AffineMap map;
  Elem theta = 0;
};

// The orderings whose 2-dimensional full-length code cannot correct a single
// insdel: (0, 1, t, ..., t^{q-2}), its reversal, for every primitive t, and
// (0, 1, ..., q-1) when q is prime, up to affine equivalence.
class BadOrderingClassifier {
 public:
  struct Reference {
    BadReason reason;
    Elem theta;
    std::vector<Elem> points;
  };

  explicit BadOrderingClassifier(Field f) : f_(std::move(f)) {
    const auto prims = primitive_elements(f_);
    for (auto th : prims) refs_.push_back({BadReason::Geometric, th, geometric(th)});
    for (auto th : prims) {
      auto g = geometric(th);
      // (t^{q-2}, ..., t, 1, 0)
      std::vector<Elem> r(g.rbegin(), g.rend());
      refs_.push_back({BadReason::ReversedGeometric, th, std::move(r)});
    }
    if (f_.is_prime_field()) {
      std::vector<Elem> ap(f_.q());
      for (Elem i = 0; i < f_.q(); ++i) ap[i] = i;
      refs_.push_back({BadReason::ArithmeticProgression, 0, std::move(ap)});
    }
  }

  const Field& field() const { return f_; }
  const std::vector<Reference>& references() const { return refs_; }

  BadOrderingVerdict classify(std::span<const Elem> alpha) const {
    if (!is_full_length_ordering(f_, alpha))
      throw PreconditionError("classify_bad_ordering: not a full-length ordering");
    for (const auto& ref : refs_) {
      const Elem lambda = f_.div(f_.sub(alpha[1], alpha[0]), f_.sub(ref.points[1], ref.points[0]));
      const Elem mu = f_.sub(alpha[0], f_.mul(lambda, ref.points[0]));
      bool eq = true;
      for (std::size_t i = 2; i < alpha.size() && eq; ++i)
        eq = f_.add(f_.mul(lambda, ref.points[i]), mu) == alpha[i];
      if (eq) return {true, ref.reason, {lambda, mu}, ref.theta};
    }
    return {};
  }

 private:
  std::vector<Elem> geometric(Elem th) const {
    std::vector<Elem> g{0, 1};
    for (Elem x = th; g.size() < f_.q(); x = f_.mul(x, th)) g.push_back(x);
    return g;
  }

  Field f_;
  std::vector<Reference> refs_;
};

inline BadOrderingVerdict classify_bad_ordering(const EvaluationVector& alpha) {
  return BadOrderingClassifier(alpha.field()).classify(alpha.span());
}

// ---- census of full-length 2-dimensional codes ---------------------------

struct CensusOptions {
  unsigned threads = default_threads();
  // Cross-check every classifier verdict against the affine LCS scan.
  bool verify = true;
  std::uint64_t max_classes = 362'880;  // 9!, i.e. q <= 11
};

struct CensusResult {
  std::uint32_t q = 0;
  std::uint64_t classes_total = 0;
  std::uint64_t classes_correcting = 0;
  std::uint64_t classes_verified = 0;
  // Reason per canonical class, in lexicographic order of (alpha_3, ..., alpha_q).
  std::vector<BadReason> verdicts;
  struct BadClass {
    std::uint64_t index;
    std::vector<Elem> alpha;
    BadOrderingVerdict verdict;
  };
  std::vector<BadClass> bad_classes;
  double proportion() const {
    return classes_total == 0 ? 0.0 : static_cast<double>(classes_correcting) / static_cast<double>(classes_total);
  }
};

inline std::uint64_t factorial_u64(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (r > ~std::uint64_t{0} / i) return ~std::uint64_t{0};
    r *= i;
  }
  return r;
}

// Classifies every canonical ordering (0, 1, ...) of F_q, one per affine
// equivalence class; there are (q - 2)! of them.
inline CensusResult census_2dim(const Field& f, const CensusOptions& opt = {}) {
  const std::uint32_t q = f.q();
  if (q < 3) throw PreconditionError("census_2dim: q must be at least 3");
  const std::uint64_t total = factorial_u64(q - 2);
  if (total > opt.max_classes)
    throw GuardExceeded("census_2dim: (q-2)! = " + std::to_string(total) + " classes exceed the limit of " +
                        std::to_string(opt.max_classes));
  const BadOrderingClassifier classifier(f);
  const std::uint64_t per_bucket = total / (q - 2);

  CensusResult out;
  out.q = q;
  out.classes_total = total;
  out.verdicts.assign(total, BadReason::NotBad);
  std::vector<std::uint64_t> verified(worker_count(q - 2, opt.threads), 0);

  parallel_chunks(q - 2, opt.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    DistinctLcs scratch(q);
    std::vector<Elem> alpha(q);
    for (std::size_t bucket = begin; bucket < end; ++bucket) {
      alpha[0] = 0;
      alpha[1] = 1;
      alpha[2] = static_cast<Elem>(bucket + 2);
      std::size_t pos = 3;
      for (Elem v = 2; v < q; ++v)
        if (v != alpha[2]) alpha[pos++] = v;
      std::uint64_t idx = bucket * per_bucket;
      do {
        const auto verdict = classifier.classify(alpha);
        out.verdicts[idx] = verdict.reason;
        if (opt.verify) {
          const bool cannot = affine_scan(f, alpha, scratch, q - 1).lcs == q - 1;
          if (cannot != verdict.bad)
            throw InvariantViolation("classifier disagrees with the LCS scan on " + format_index_list(alpha));
          ++verified[w];
        }
        ++idx;
      } while (std::next_permutation(alpha.begin() + 3, alpha.end()));
    }
  });

  for (auto v : verified) out.classes_verified += v;
  // Rebuild the bad vectors sequentially so the list is in class order.
  std::vector<Elem> alpha(q);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (out.verdicts[idx] == BadReason::NotBad) {
      ++out.classes_correcting;
      continue;
    }
    // Decode the class index into the permutation of {2, ..., q-1}.
    std::vector<Elem> pool;
    for (Elem v = 2; v < q; ++v) pool.push_back(v);
    alpha[0] = 0;
    alpha[1] = 1;
    std::uint64_t rem = idx;
    for (std::size_t i = 2; i < q; ++i) {
      const std::uint64_t block = factorial_u64(q - 1 - i);
      const auto pick = static_cast<std::size_t>(rem / block);
      rem %= block;
      alpha[i] = pool[pick];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    out.bad_classes.push_back({idx, alpha, classifier.classify(alpha)});
  }
  return out;
}

// ---- random orderings -----------------------------------------------------

struct SampleOptions {
  unsigned threads = default_threads();
  std::uint32_t max_q = 128;
};

struct SampleResult {
  std::uint32_t q = 0;
  double delta = 0;
  std::uint64_t seed = 0;
  std::size_t ell = 0;  // floor(delta q); "corrects (1 - delta) q" iff LCS(C) <= ell - 1
  std::vector<std::size_t> lcs;
  std::size_t corrects_target = 0;
  std::size_t corrects_one = 0;  // LCS(C) <= q - 2
  std::optional<double> fraction_target() const {
    if (lcs.empty()) return std::nullopt;
    return static_cast<double>(corrects_target) / static_cast<double>(lcs.size());
  }
  std::optional<double> fraction_one() const {
    if (lcs.empty()) return std::nullopt;
    return static_cast<double>(corrects_one) / static_cast<double>(lcs.size());
  }
};

// Uniform integer in [0, bound) from mt19937_64 by rejection; identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % bound;
}

// Fisher-Yates shuffle of (0, 1, ..., q-1), swapping position i with a uniform
// j in [0, i] for i = q-1 down to 1.
inline std::vector<Elem> random_ordering(std::uint32_t q, std::mt19937_64& rng) {
  std::vector<Elem> a(q);
  for (Elem i = 0; i < q; ++i) a[i] = i;
  for (std::uint32_t i = q - 1; i >= 1; --i) std::swap(a[i], a[uniform_below(rng, i + 1)]);
  return a;
}

inline SampleResult sample_orderings(const Field& f, double delta, std::size_t trials, std::uint64_t seed,
                                     const SampleOptions& opt = {}) {
  if (!(delta > 0.0 && delta <= 1.0)) throw PreconditionError("sample_orderings: delta must lie in (0, 1]");
  if (f.q() > opt.max_q)
    throw GuardExceeded("sample_orderings: q = " + std::to_string(f.q()) + " exceeds the limit of " +
                        std::to_string(opt.max_q));
  SampleResult out;
  out.q = f.q();
  out.delta = delta;
  out.seed = seed;
  out.ell = static_cast<std::size_t>(std::floor(delta * f.q() + 1e-9));
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Elem>> orderings;
  orderings.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) orderings.push_back(random_ordering(f.q(), rng));

  out.lcs.assign(trials, 0);
  parallel_chunks(trials, opt.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    DistinctLcs scratch(f.q());
    for (std::size_t t = begin; t < end; ++t)
      out.lcs[t] = std::max<std::size_t>(affine_scan(f, orderings[t], scratch).lcs, 1);
  });
  for (auto v : out.lcs) {
    if (v + 1 <= out.ell) ++out.corrects_target;
    if (v + 2 <= f.q()) ++out.corrects_one;
  }
  return out;
}

// Three decimals, rounded half-up, except that a proportion strictly below 1
// is never shown as 1.000.
inline std::string format_proportion(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  if (x < 1.0 && s == "1.000") s = "0.999";
  return s;
}

}  // namespace rsid
