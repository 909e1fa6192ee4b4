#pragma once

// Deterministic construction of evaluation vectors alpha in F_q^{2k} whose
// RS_{2k,k}(alpha) code corrects one insdel: a 4-point base case, then one
// pair of points per dimension, avoiding every pair that would create a
// length-(2i-1) common subsequence between two codewords.

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "rsid/analyze.hpp"
#include "rsid/certificate.hpp"

namespace rsid {

// 20k^4 - 90k^3 + 150k^2 - 106k + 27, and at least 7 (the smallest field with
// an optimal RS_{4,2} code).
inline std::uint64_t prop14_min_q(std::uint64_t k) {
  if (k < 2) throw PreconditionError("prop14_min_q: k must be at least 2");
  const std::uint64_t k2 = k * k, k3 = k2 * k, k4 = k3 * k;
  const std::uint64_t v = 20 * k4 + 150 * k2 + 27 - 90 * k3 - 106 * k;
  return std::max<std::uint64_t>(v, 7);
}

inline std::uint64_t coarse_min_q(std::uint64_t k) {
  if (k < 2) throw PreconditionError("coarse_min_q: k must be at least 2");
  return 100 * k * k * k * k;
}

// Field size below which construct_half_rate refuses to run unless asked to.
// For k = 2 only the base case runs, which needs q >= 7.
inline std::uint64_t construction_min_q(std::uint64_t k, bool coarse = false) {
  if (coarse) return coarse_min_q(k);
  return k == 2 ? 7 : prop14_min_q(k);
}

// (0, 1, a1, a2) with the lexicographically least admissible (a1, a2).
inline EvaluationVector base_case(const Field& f) {
  if (f.q() < 7) throw NoBaseCase("no optimal RS_{4,2} code exists over " + format_field(f) + " (q < 7)");
  for (Elem a1 = 2; a1 < f.q(); ++a1)
    for (Elem a2 = 2; a2 < f.q(); ++a2)
      if (a2 != a1 && predicate_rs42(f, a1, a2)) return EvaluationVector(f, {0, 1, a1, a2});
  throw NoBaseCase("no admissible (a1, a2) over " + format_field(f));
}

struct ExtendOptions {
  unsigned threads = default_threads();
  // Only index pairs with d_H(I*, J*) >= i - 2, the only ones that can extend
  // to a pair I, J with d_H(I, J) >= i.
  bool restrict_hamming = false;
};

struct ExtendStats {
  std::size_t i = 0;
  std::uint64_t index_pairs = 0;          // ordered I* != J*
  std::uint64_t index_pairs_skipped = 0;  // restricted away or singular with d_H < i - 2
  std::uint64_t systems_solved = 0;       // (I*, J*, g~_{i-1}) with a unique solution
  std::uint64_t degenerate = 0;           // solutions with f~ = g~
  std::uint64_t bad_pair_count = 0;       // |B|
  std::uint64_t bad_pair_ceiling = 0;
  std::pair<Elem, Elem> chosen{0, 0};
};

namespace detail {

inline std::uint64_t pair_key(Elem x, Elem y) { return (std::uint64_t{x} << 32) | y; }

}  // namespace detail

// One step of the construction: alpha of length 2i - 2 with an optimal
// RS_{2i-2,i-1} code becomes alpha of length 2i with an optimal RS_{2i,i}.
//
// Any f != g, deg < i, agreeing on alpha_I / alpha_J restrict to the first
// 2i - 3 positions I*, J*. Normalizing f monic with f_0 = 0 (f~, g~) and fixing
// g~_{i-1} leaves a square system in the remaining coefficients; its unique
// solution then forbids the pairs (alpha_{2i-1}, alpha_{2i}) that satisfy one
// of the five ways the last two positions of I and J can be placed.
inline EvaluationVector extend(const EvaluationVector& alpha, std::size_t i, const ExtendOptions& opt = {},
                               ExtendStats* stats = nullptr) {
  if (i < 3) throw PreconditionError("extend: i must be at least 3");
  if (alpha.size() != 2 * i - 2) throw PreconditionError("extend: need an evaluation vector of length 2i - 2");
  const Field& f = alpha.field();
  const std::uint32_t q = f.q();
  if (q < 2 * i) throw PreconditionError("extend: field has fewer than 2i elements");
  const std::size_t n0 = 2 * i - 2, m = 2 * i - 3, d = i - 1;  // d = deg f~
  const Elem last = alpha[n0 - 1];

  const auto seqs = all_increasing(static_cast<std::uint32_t>(n0), static_cast<std::uint32_t>(m));
  struct IndexPair {
    std::size_t a, b;
    std::vector<Elem> xa, xb;  // solutions for right-hand sides alpha_I^{d} and alpha_J^{d}
  };
  std::vector<IndexPair> work;
  ExtendStats st;
  st.i = i;
  for (std::size_t a = 0; a < seqs.size(); ++a)
    for (std::size_t b = 0; b < seqs.size(); ++b) {
      if (a == b) continue;
      ++st.index_pairs;
      const auto& I = seqs[a];
      const auto& J = seqs[b];
      const std::size_t dh = hamming_increasing(I, J);
      if (opt.restrict_hamming && dh + 2 < i) {
        ++st.index_pairs_skipped;
        continue;
      }
      // Unknowns (g~_0, ..., g~_{d-1}, f~_1, ..., f~_{d-1}); row t reads
      // sum_j g~_j a_{J_t}^j - sum_j f~_j a_{I_t}^j = a_{I_t}^d - g~_d a_{J_t}^d.
      Matrix aug(f, m, m + 2);
      for (std::size_t t = 0; t < m; ++t) {
        const Elem x = alpha[I[t] - 1], y = alpha[J[t] - 1];
        Elem px = 1, py = 1;
        for (std::size_t j = 0; j < d; ++j) {
          aug(t, j) = py;
          if (j > 0) aug(t, d - 1 + j) = f.neg(px);
          px = f.mul(px, x);
          py = f.mul(py, y);
        }
        aug(t, m) = px;      // a_{I_t}^d
        aug(t, m + 1) = py;  // a_{J_t}^d
      }
      const auto pivots = aug.reduce();
      const bool singular = pivots.size() < m || pivots[m - 1] != m - 1;
      if (singular) {
        // Only pairs with d_H(I*, J*) >= i - 2 matter, and for those the
        // optimality of the input forces a trivial kernel.
        if (dh + 2 >= i)
          throw SingularSystem("extend: singular system for I* = (" + format_index_list(I.indices()) +
                               "), J* = (" + format_index_list(J.indices()) + ") at i = " + std::to_string(i));
        ++st.index_pairs_skipped;
        continue;
      }
      IndexPair ip{a, b, std::vector<Elem>(m), std::vector<Elem>(m)};
      for (std::size_t r = 0; r < m; ++r) {
        ip.xa[r] = aug(r, m);
        ip.xb[r] = aug(r, m + 1);
      }
      work.push_back(std::move(ip));
    }

  const std::uint64_t total = static_cast<std::uint64_t>(work.size()) * q;
  const std::size_t workers = worker_count(total, opt.threads);
  std::vector<std::vector<std::uint64_t>> local(workers);
  std::vector<std::uint64_t> degenerate(workers, 0);
  parallel_chunks(total, opt.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    std::vector<Elem> fc(d + 1), gc(d + 1), hc(d + 1);
    ValueTable ft, gt, ht;
    auto& out = local[w];
    for (std::uint64_t x = begin; x < end; ++x) {
      const auto& ip = work[x / q];
      const Elem gamma = static_cast<Elem>(x % q);  // g~_{i-1}
      // x = xa - gamma xb
      fc[0] = 0;
      fc[d] = 1;
      gc[d] = gamma;
      for (std::size_t j = 0; j < d; ++j) gc[j] = f.sub(ip.xa[j], f.mul(gamma, ip.xb[j]));
      for (std::size_t j = 1; j < d; ++j) fc[j] = f.sub(ip.xa[d - 1 + j], f.mul(gamma, ip.xb[d - 1 + j]));
      // f~ = g~ means f = g; such pairs never witness a common subsequence of
      // distinct codewords.
      if (fc == gc) {
        ++degenerate[w];
        continue;
      }
      for (std::size_t j = 0; j <= d; ++j) hc[j] = f.sub(fc[j], gc[j]);
      const Polynomial fp(f, fc), gp(f, gc), hp(f, hc);
      ft.reset(fp);
      gt.reset(gp);
      ht.reset(hp);
      const auto diff_roots = ht.preimage(0);
      // (1) f~(a) = g~(x), f~(x) = g~(y)
      for (Elem u : gt.preimage(ft.value(last)))
        for (Elem v : gt.preimage(ft.value(u))) out.push_back(detail::pair_key(u, v));
      // (2) f~(a) = g~(x), f~(y) = g~(y)
      for (Elem u : gt.preimage(ft.value(last)))
        for (Elem v : diff_roots) out.push_back(detail::pair_key(u, v));
      // (3) f~(x) = g~(a), f~(y) = g~(x)
      for (Elem u : ft.preimage(gt.value(last)))
        for (Elem v : ft.preimage(gt.value(u))) out.push_back(detail::pair_key(u, v));
      // (4) f~(x) = g~(a), f~(y) = g~(y)
      for (Elem u : ft.preimage(gt.value(last)))
        for (Elem v : diff_roots) out.push_back(detail::pair_key(u, v));
      // (5) f~(x) = g~(x), f~(y) = g~(y)
      for (Elem u : diff_roots)
        for (Elem v : diff_roots) out.push_back(detail::pair_key(u, v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  });

  std::vector<std::uint64_t> bad;
  for (auto& v : local) bad.insert(bad.end(), v.begin(), v.end());
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  st.systems_solved = total;
  for (auto v : degenerate) st.degenerate += v;
  st.systems_solved -= st.degenerate;
  st.bad_pair_count = bad.size();
  // Each of the five systems has at most (i-1)^2 solutions per (I*, J*, g~_{i-1}).
  st.bad_pair_ceiling = 5ull * d * d * q * n0 * m;
  if (st.bad_pair_count > st.bad_pair_ceiling)
    throw InvariantViolation("extend: bad set of " + std::to_string(st.bad_pair_count) + " pairs exceeds " +
                             std::to_string(st.bad_pair_ceiling));

  std::vector<bool> used(q, false);
  for (auto v : alpha.points()) used[v] = true;
  for (Elem x = 0; x < q; ++x) {
    if (used[x]) continue;
    for (Elem y = 0; y < q; ++y) {
      if (used[y] || y == x || std::binary_search(bad.begin(), bad.end(), detail::pair_key(x, y))) continue;
      st.chosen = {x, y};
      if (stats) *stats = st;
      auto pts = alpha.points();
      pts.push_back(x);
      pts.push_back(y);
      return EvaluationVector(f, std::move(pts));
    }
  }
  if (stats) *stats = st;
  throw NoGoodPair("extend: every pair of new points is excluded at i = " + std::to_string(i) + " over " +
                   format_field(f) + " (" + std::to_string(st.bad_pair_count) + " bad pairs)");
}

enum class VerifyMode { Exact, Certificate, None };
enum class StageVerification { ExactOptimal, RankCertified, Skipped };

inline const char* to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::Exact: return "Exact";
    case VerifyMode::Certificate: return "Certificate";
    case VerifyMode::None: return "None";
  }
  return "?";
}

inline const char* to_string(StageVerification v) {
  switch (v) {
    case StageVerification::ExactOptimal: return "ExactOptimal";
    case StageVerification::RankCertified: return "RankCertified";
    case StageVerification::Skipped: return "Skipped";
  }
  return "?";
}

struct ConstructOptions {
  VerifyMode verify = VerifyMode::Exact;
  bool allow_small_q = false;
  bool coarse_bound = false;
  bool restrict_hamming = false;
  unsigned threads = default_threads();
};

struct ConstructionStage {
  std::size_t i = 0;
  std::uint64_t bad_pair_count = 0;
  std::pair<Elem, Elem> chosen{0, 0};
  StageVerification verification = StageVerification::Skipped;
  ExtendStats stats;  // zero for the base case
};

struct ConstructionTrace {
  Field field;
  std::size_t k = 0;
  std::uint64_t min_q = 0;
  std::vector<ConstructionStage> stages;
  std::vector<Elem> alpha;
};

// Checks RS_{2i,i}(alpha). For n = 2k and t = 1 the rank certificate is exact.
inline StageVerification verify_stage(const EvaluationVector& alpha, std::size_t i, VerifyMode mode,
                                      unsigned threads) {
  switch (mode) {
    case VerifyMode::None: return StageVerification::Skipped;
    case VerifyMode::Exact: {
      AnalyzeOptions ao;
      ao.threads = threads;
      if (!is_optimal_half_rate(alpha, i, ao).optimal)
        throw InvariantViolation("stage " + std::to_string(i) + " output is not optimal: " +
                                 format_evaluation_vector(alpha));
      return StageVerification::ExactOptimal;
    }
    case VerifyMode::Certificate: {
      CertificateOptions co;
      co.threads = threads;
      if (!rank_certificate(RsCode(alpha, i), 1, co).certified)
        throw InvariantViolation("stage " + std::to_string(i) + " output fails the rank certificate: " +
                                 format_evaluation_vector(alpha));
      return StageVerification::RankCertified;
    }
  }
  return StageVerification::Skipped;
}

inline ConstructionTrace construct_half_rate(const Field& f, std::size_t k, const ConstructOptions& opt = {}) {
  if (k < 2) throw PreconditionError("construct_half_rate: k must be at least 2");
  ConstructionTrace tr{f, k, construction_min_q(k, opt.coarse_bound), {}, {}};
  if (f.q() < 7) throw NoBaseCase("no optimal RS_{4,2} code exists over " + format_field(f) + " (q < 7)");
  if (f.q() < tr.min_q && !opt.allow_small_q)
    throw PreconditionError("construct_half_rate: q = " + std::to_string(f.q()) + " is below " +
                            std::to_string(tr.min_q) + " for k = " + std::to_string(k) +
                            " (pass allow_small_q to try anyway)");

  EvaluationVector alpha = base_case(f);
  ConstructionStage base;
  base.i = 2;
  base.chosen = {alpha[2], alpha[3]};
  base.verification = verify_stage(alpha, 2, opt.verify, opt.threads);
  tr.stages.push_back(base);

  for (std::size_t i = 3; i <= k; ++i) {
    ExtendStats st;
    alpha = extend(alpha, i, ExtendOptions{opt.threads, opt.restrict_hamming}, &st);
    ConstructionStage s;
    s.i = i;
    s.bad_pair_count = st.bad_pair_count;
    s.chosen = st.chosen;
    s.stats = st;
    s.verification = verify_stage(alpha, i, opt.verify, opt.threads);
    tr.stages.push_back(s);
  }
  tr.alpha = alpha.points();
  return tr;
}

}  // namespace rsid
