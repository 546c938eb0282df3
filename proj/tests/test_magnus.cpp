#include <trilink/harness.hpp>
#include <trilink/magnus.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace trilink;

namespace {

SignedWord random_word(std::mt19937_64& rng, std::size_t max_len, std::size_t symbols = 3) {
  SignedWord w(rng() % (max_len + 1));
  for (auto& l : w) l = {static_cast<std::size_t>(rng() % symbols), rng() % 2 ? 1 : -1};
  return w;
}

std::int64_t brute_occurrence(const SignedWord& w, std::size_t r, std::size_t s) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i].symbol == r && w[j].symbol == s) total += w[i].exponent * w[j].exponent;
  return total;
}

SignedWord concat(SignedWord a, const SignedWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TruncatedSeries expand(const SignedWord& w) {
  TruncatedSeries s = TruncatedSeries::one();
  for (const auto& l : w) s = s * series_pow(TruncatedSeries::generator(l.symbol), l.exponent);
  return s;
}

LinkDiagram link(std::uint64_t seed, LinkingMode mode) {
  GenParams p;
  p.seed = seed;
  return random_link(p, mode);
}

}  // namespace

TEST(SignedOccurrence, Examples) {
  EXPECT_EQ(signed_occurrence({}, 0, 1), 0);
  EXPECT_EQ(signed_occurrence({{0, 1}, {1, 1}}, 0, 1), 1);
  EXPECT_EQ(signed_occurrence({{1, 1}, {0, 1}}, 0, 1), 0);
  EXPECT_EQ(signed_occurrence({{0, -1}, {1, 1}, {1, -1}, {0, 1}, {1, 1}}, 0, 1), 0);
  EXPECT_EQ(signed_occurrence({{0, -1}, {1, 1}, {0, 1}, {0, 1}, {1, -1}}, 0, 1), -2);
  EXPECT_EQ(signed_occurrence({{0, 1}, {0, 1}, {1, -1}}, 0, 1), -2);
  EXPECT_EQ(signed_occurrence({{1, 1}, {1, -1}, {1, 1}}, 1, 2), 0);
}

TEST(SignedOccurrence, MatchesPairEnumeration) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto w = random_word(rng, 20);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(signed_occurrence(w, r, s), brute_occurrence(w, r, s));
  }
}

TEST(SignedOccurrence, ConcatenationIdentity) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_word(rng, 12), v = random_word(rng, 12);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s)
        EXPECT_EQ(signed_occurrence(concat(u, v), r, s),
                  signed_occurrence(u, r, s) + signed_occurrence(v, r, s) + exponent_sum(u, r) * exponent_sum(v, s));
  }
}

TEST(SignedOccurrence, IsTheMagnusCoefficient) {
  // The x_r x_s coefficient of a word's expansion counts ordered pairs with
  // exponent products, plus a correction for each inverse letter when r = s.
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(rng, 10);
    const auto e = expand(w);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s)
        if (r != s) EXPECT_EQ(e.quad[r][s], signed_occurrence(w, r, s));
  }
}

TEST(MFromWords, Examples) {
  EXPECT_EQ(m_from_words({}, {}, {}), 0);
  EXPECT_EQ(m_from_words({{2, 1}, {1, 1}}, {}, {}), 0);
  EXPECT_EQ(m_from_words({{1, 1}, {2, 1}}, {}, {}), 1);
  // Words of the form 2...2 1...1 never contribute.
  EXPECT_EQ(m_from_words({{2, 1}, {2, -1}, {2, 1}, {1, -1}, {1, 1}}, {}, {}), 0);
  EXPECT_EQ(m_from_words({}, {{2, 1}, {0, -1}}, {{0, 1}, {1, 1}}), 0);
  EXPECT_THROW(m_from_words({{0, 1}}, {}, {}), std::invalid_argument);
}

TEST(Series, ProductsAndInverses) {
  const auto x0 = TruncatedSeries::generator(0), x1 = TruncatedSeries::generator(1);
  const auto p = x0 * x1;
  EXPECT_EQ(p.lin, (std::array<std::int64_t, 3>{1, 1, 0}));
  EXPECT_EQ(p.quad[0][1], 1);
  EXPECT_EQ(p.quad[1][0], 0);
  EXPECT_EQ(x0 * series_inv(x0), TruncatedSeries::one());
  EXPECT_EQ(series_inv(x0).quad[0][0], 1);
  TruncatedSeries two = TruncatedSeries::one();
  two.c0 = 2;
  EXPECT_THROW(series_inv(two), NotInvertible);
}

TEST(Series, CommutatorIsTheBracket) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    const auto a = expand(random_word(rng, 6)), b = expand(random_word(rng, 6));
    const auto c = a * b * series_inv(a) * series_inv(b);
    EXPECT_EQ(c.c0, 1);
    EXPECT_EQ(c.lin, (std::array<std::int64_t, 3>{}));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(c.quad[r][s], a.lin[r] * b.lin[s] - b.lin[r] * a.lin[s]);
  }
}

TEST(Arcs, SplitUnlink) {
  const auto arcs = arc_expansions(construct_L_of_D(disjoint_doodle()));
  for (std::size_t c = 0; c < 3; ++c) {
    ASSERT_EQ(arcs[c].size(), 1u);
    EXPECT_EQ(arcs[c][0].expansion, TruncatedSeries::generator(c));
  }
}

TEST(Arcs, OneArcPerUnderPass) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const LinkDiagram L = link(seed, LinkingMode::Free);
    const auto arcs = arc_expansions(L);
    for (std::size_t c = 0; c < 3; ++c) {
      std::size_t unders = 0;
      for (const auto& x : L.crossings()) unders += x.under_component() == c;
      EXPECT_EQ(arcs[c].size(), std::max<std::size_t>(unders, 1));
      for (const auto& a : arcs[c]) {
        EXPECT_EQ(a.expansion.c0, 1);
        EXPECT_EQ(a.expansion.lin, TruncatedSeries::generator(c).lin);
      }
    }
  }
}

TEST(Longitude, LinearPartIsLinkingNumber) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const LinkDiagram L = link(seed, corpus_mode(seed));
    for (std::size_t k = 0; k < 3; ++k) {
      const auto lon = longitude_expansion(L, k);
      // No framing correction: the own-meridian exponent is the self writhe.
      std::int64_t writhe = 0;
      for (const auto& x : L.crossings())
        if (x.is_self() && x.key.comp_a == k) writhe += x.gamma;
      EXPECT_EQ(lon.lin[k], writhe);
      for (std::size_t j = 0; j < 3; ++j)
        if (j != k) EXPECT_EQ(lon.lin[j], linking_number(L, j, k)) << "seed " << seed;
    }
  }
}

TEST(MuBar, Borromean) {
  const LinkDiagram L = construct_L_of_D(venn_doodle());
  const Residue r = mu_bar_oracle(L);
  EXPECT_EQ(r.modulus, 0);
  EXPECT_EQ(std::abs(r.value), 1);
}

TEST(MuBar, UnlinkIsZero) {
  EXPECT_EQ(mu_bar_oracle(construct_L_of_D(disjoint_doodle())), Residue::make(0, 0));
}

TEST(MuBar, CyclicSymmetryAndAntisymmetry) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const LinkDiagram L = link(seed, corpus_mode(seed));
    const Residue r = mu_bar_oracle(L, {0, 1, 2});
    EXPECT_EQ(mu_bar_oracle(L, {1, 2, 0}), r) << "seed " << seed;
    EXPECT_EQ(mu_bar_oracle(L, {2, 0, 1}), r) << "seed " << seed;
    EXPECT_TRUE(mu_bar_oracle(L, {1, 0, 2}).contains(-r.value)) << "seed " << seed;
  }
}

TEST(MuBar, IndependentOfBaseArcs) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_EQ(rebase_variants(link(seed, corpus_mode(seed)), 6), 1u) << "seed " << seed;
  }
}

TEST(Residue, Arithmetic) {
  EXPECT_EQ(Residue::make(-1, 2).value, 1);
  EXPECT_EQ(Residue::make(-3, 0).value, -3);
  EXPECT_TRUE(Residue::make(5, 3).contains(-1));
  EXPECT_FALSE(Residue::make(5, 0).contains(-1));
}
