#include <gtest/gtest.h>

#include <random>

#include "rsid/rscode.hpp"

using namespace rsid;

namespace {

// Textbook full-table LCS, kept independent of the rolling-row version.
std::size_t lcs_table(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
  return t[a.size()][b.size()];
}

std::vector<Elem> random_seq(std::mt19937_64& rng, std::size_t n, Elem q) {
  std::vector<Elem> s(n);
  for (auto& v : s) v = static_cast<Elem>(rng() % q);
  return s;
}

}  // namespace

TEST(Lcs, Examples) {
  const std::vector<Elem> s{2, 4, 1, 3, 0, 2}, t{4, 3, 2, 1, 0};
  EXPECT_EQ(lcs(s, t), 3u);
  EXPECT_EQ(edit_distance(s, t), 5u);
  EXPECT_EQ(lcs(s, s), s.size());
  EXPECT_EQ(lcs(s, {}), 0u);
  EXPECT_EQ(edit_distance(s, s), 0u);
  EXPECT_EQ(edit_distance(s, {}), s.size());
}

TEST(Lcs, WitnessIsCommonSubsequence) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 300; ++it) {
    const auto a = random_seq(rng, rng() % 12, 4), b = random_seq(rng, rng() % 12, 4);
    const auto w = lcs_witness(a, b);
    ASSERT_EQ(w.length, lcs_table(a, b));
    ASSERT_EQ(lcs(a, b), w.length);
    ASSERT_EQ(w.left.size(), w.length);
    for (std::size_t t = 0; t < w.length; ++t) {
      ASSERT_EQ(a[w.left[t] - 1], b[w.right[t] - 1]);
      if (t) {
        ASSERT_LT(w.left[t - 1], w.left[t]);
        ASSERT_LT(w.right[t - 1], w.right[t]);
      }
    }
  }
}

TEST(Lcs, SymmetricAndMonotone) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 300; ++it) {
    auto a = random_seq(rng, 1 + rng() % 12, 5);
    const auto b = random_seq(rng, rng() % 12, 5);
    const auto full = lcs(a, b);
    ASSERT_EQ(full, lcs(b, a));
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(rng() % a.size()));
    const auto cut = lcs(a, b);
    ASSERT_LE(cut, full);
    ASSERT_GE(cut + 1, full);
  }
}

TEST(Lcs, AffineIsometry) {
  std::mt19937_64 rng(3);
  for (std::uint64_t q : {7, 8, 9}) {
    const Field f = Field::of_order(q);
    for (int it = 0; it < 100; ++it) {
      const auto a = random_seq(rng, rng() % 10, f.q()), b = random_seq(rng, rng() % 10, f.q());
      const AffineMap m{static_cast<Elem>(1 + rng() % (q - 1)), static_cast<Elem>(rng() % q)};
      ASSERT_EQ(edit_distance(apply(f, m, a), apply(f, m, b)), edit_distance(a, b));
    }
  }
}

TEST(Lcs, DistinctSymbolsViaIncreasingSubsequence) {
  std::mt19937_64 rng(4);
  DistinctLcs d(40);
  for (int it = 0; it < 300; ++it) {
    std::vector<Elem> a(40), b(40);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    a.resize(rng() % 40);
    b.resize(rng() % 40);
    d.set_reference(a);
    ASSERT_EQ(d(b), lcs(a, b));
  }
}

TEST(IncreasingSequence, HammingDistance) {
  EXPECT_EQ(hamming_increasing(IncreasingSequence({1, 2, 3, 4}, 5), IncreasingSequence({2, 3, 4, 5}, 5)), 4u);
  const IncreasingSequence i({1, 2, 4}, 4);
  EXPECT_EQ(hamming_increasing(i, i), 0u);
  EXPECT_EQ(hamming_increasing(i, IncreasingSequence({1, 3, 4}, 4)), 1u);
  EXPECT_THROW(hamming_increasing(i, IncreasingSequence({1, 3}, 4)), DimensionMismatch);
  EXPECT_THROW(IncreasingSequence({2, 2}, 4), PreconditionError);
  EXPECT_THROW(IncreasingSequence({0, 2}, 4), PreconditionError);
  EXPECT_THROW(IncreasingSequence({1, 5}, 4), PreconditionError);
}

// Two sequences of length l - 1 in [l] that skip s_I and s_J differ in |s_I - s_J| places.
TEST(IncreasingSequence, HammingOfNearlyFullSequences) {
  for (std::uint32_t l = 2; l <= 9; ++l) {
    const auto seqs = all_increasing(l, l - 1);
    for (const auto& a : seqs)
      for (const auto& b : seqs) {
        const auto sa = a.missing(), sb = b.missing();
        ASSERT_EQ(hamming_increasing(a, b), sa > sb ? sa - sb : sb - sa);
      }
  }
}

TEST(IncreasingSequence, Enumeration) {
  std::vector<std::vector<std::uint32_t>> got;
  for (auto s : enumerate_increasing(3, 2)) got.push_back(s.indices());
  EXPECT_EQ(got, (std::vector<std::vector<std::uint32_t>>{{1, 2}, {1, 3}, {2, 3}}));
  const auto full = all_increasing(4, 4);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full[0].indices(), (std::vector<std::uint32_t>{1, 2, 3, 4}));
  EXPECT_EQ(enumerate_increasing(6, 3).count(), 20u);
  EXPECT_EQ(all_increasing(6, 3).size(), 20u);
  EXPECT_EQ(all_increasing(5, 0).size(), 1u);
  EXPECT_THROW(enumerate_increasing(3, 4), PreconditionError);
}

TEST(BuildV, Examples) {
  Field f7(7);
  const std::vector<Elem> alpha{0, 1, 2, 5};
  const IncreasingSequence I({1, 2, 3}, 4), J({2, 3, 4}, 4);
  const Matrix v = build_V(f7, alpha, 2, I, J);
  EXPECT_EQ(v.rows(), 3u);
  EXPECT_EQ(v.cols(), 3u);
  const std::vector<std::vector<Elem>> expect{{1, 0, 1}, {1, 1, 2}, {1, 2, 5}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(v(r, c), expect[r][c]);
  EXPECT_EQ(rank(v), 3u);

  const std::vector<Elem> six{0, 1, 2, 3, 4, 5};
  const Matrix w = build_V(f7, six, 3, IncreasingSequence({1, 2, 3, 4, 5}, 6), IncreasingSequence({2, 3, 4, 5, 6}, 6));
  EXPECT_EQ(w.rows(), 5u);
  EXPECT_EQ(w.cols(), 5u);

  const Matrix ones = build_V(f7, alpha, 1, I, J);
  EXPECT_EQ(ones.cols(), 1u);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(ones(r, 0), 1u);
}
