#pragma once

// Sufficient condition for insdel correction: if every V_{k,l,I,J}(alpha) with
// d_H(I, J) >= l - k + 1 has full column rank 2k - 1, the code corrects n - l
// insdel errors. A rank-deficient pair does not prove failure.

#include <atomic>
#include <optional>
#include <utility>

#include "rsid/parallel.hpp"
#include "rsid/rscode.hpp"

namespace rsid {

struct CertificateOptions {
  unsigned threads = default_threads();
  // Upper limit on the number of unordered (I, J) pairs examined.
  std::uint64_t max_pairs = 50'000'000;
};

struct CertificateResult {
  bool certified = false;
  std::size_t t = 0;
  std::size_t l = 0;
  std::uint64_t pairs_checked = 0;
  // First rank-deficient pair in lexicographic (I, J) order.
  std::optional<std::pair<IncreasingSequence, IncreasingSequence>> witness;
};

inline CertificateResult rank_certificate(const RsCode& code, std::size_t t,
                                          const CertificateOptions& opt = {}) {
  const std::size_t n = code.n(), k = code.k();
  if (t > n || n - t < 2 * k - 1)
    throw PreconditionError("rank_certificate: need 2k - 1 <= n - t <= n");
  const std::size_t l = n - t;
  const std::size_t threshold = l - k + 1;
  const auto seqs = all_increasing(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(l));
  const std::uint64_t total = static_cast<std::uint64_t>(seqs.size()) * (seqs.size() - 1) / 2;
  if (total > opt.max_pairs)
    throw GuardExceeded("rank_certificate: " + std::to_string(total) + " index pairs exceed the limit of " +
                        std::to_string(opt.max_pairs));

  const Field& f = code.field();
  const auto alpha = code.eval().span();
  const std::size_t full = 2 * k - 1;
  const std::size_t none = seqs.size();
  std::atomic<std::size_t> best_i{none};
  std::vector<std::pair<std::size_t, std::size_t>> found(worker_count(seqs.size(), opt.threads), {none, none});
  std::vector<std::uint64_t> checked(found.size(), 0);

  // rank V(I, J) = rank V(J, I), so unordered pairs suffice; the lexicographically
  // first deficient ordered pair always has I < J.
  parallel_chunks(seqs.size(), opt.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (i > best_i.load(std::memory_order_relaxed)) return;
      for (std::size_t j = i + 1; j < seqs.size(); ++j) {
        if (hamming_increasing(seqs[i], seqs[j]) < threshold) continue;
        ++checked[w];
        if (rank(build_V(f, alpha, k, seqs[i], seqs[j])) < full) {
          found[w] = {i, j};
          std::size_t cur = best_i.load();
          while (i < cur && !best_i.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  });

  CertificateResult out;
  out.t = t;
  out.l = l;
  for (auto c : checked) out.pairs_checked += c;
  auto first = std::min_element(found.begin(), found.end());
  out.certified = first->first == none;
  if (!out.certified) out.witness.emplace(seqs[first->first], seqs[first->second]);
  return out;
}

}  // namespace rsid
