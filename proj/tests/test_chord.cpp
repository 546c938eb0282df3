#include <trilink/chord.hpp>
#include <trilink/instances.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace trilink;

namespace {

std::vector<ChordMark> marks_from_code(std::size_t n, std::size_t code) {
  std::vector<ChordMark> marks;
  for (std::size_t i = 0; i < n; ++i, code /= 4) {
    marks.push_back({code % 2 ? ChordSet::TowardC : ChordSet::TowardNc, (code / 2) % 2 ? -1 : 1});
  }
  return marks;
}

// Chords {a,b} and {c,d} on a circle of n labelled points cross iff exactly
// one of c, d lies strictly between a and b.
bool separated(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  const auto lo = std::min(a, b), hi = std::max(a, b);
  const bool c_in = c > lo && c < hi;
  const bool d_in = d > lo && d < hi;
  return c_in != d_in;
}

LinkDiagram link(std::uint64_t seed, LinkingMode mode = LinkingMode::Free) {
  GenParams p;
  p.seed = seed;
  return random_link(p, mode);
}

}  // namespace

TEST(ChordDiagram, NoOverCrossings) {
  const LinkDiagram L = construct_L_of_D(disjoint_doodle());
  for (std::size_t k = 0; k < 3; ++k) {
    const auto g = build_chord_diagram(L, k);
    EXPECT_EQ(g.skeleton().size(), 2u);
    EXPECT_TRUE(g.chords().empty());
    EXPECT_EQ(pairing_combinatorial(g), 0);
    EXPECT_EQ(pairing_geometric(g), 0);
  }
}

TEST(ChordDiagram, LofDHasOnlyNcChords) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenParams p;
    p.seed = seed;
    const LinkDiagram L = construct_L_of_D(random_doodle(p));
    for (std::size_t k = 0; k < 3; ++k) {
      const auto g = build_chord_diagram(L, k);
      EXPECT_EQ(g.count(ChordSet::TowardC), 0u);
      EXPECT_EQ(pairing_combinatorial(g), 0);
    }
  }
}

TEST(ChordDiagram, ChordsMatchOverSets) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const LinkDiagram L = link(seed);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto s = over_crossing_sets(L, k);
      const auto g = build_chord_diagram(L, k);
      EXPECT_NO_THROW(g.validate());
      EXPECT_EQ(g.chords().size(), s.all.size());
      EXPECT_EQ(g.count(ChordSet::TowardNc), s.under_next.size());
      EXPECT_EQ(g.count(ChordSet::TowardC), s.under_prev.size());
      for (const auto& c : g.chords()) {
        const auto& m = g.skeleton()[c.crossing_end];
        ASSERT_TRUE(m.crossing.has_value());
        EXPECT_EQ(L.crossings()[*m.crossing].gamma, m.gamma);
        EXPECT_EQ(c.toward_base, m.gamma == 1);
      }
    }
  }
}

TEST(ChordDiagram, GapRotatesTheMarks) {
  const LinkDiagram L = link(2);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t n = gap_count(L, k);
    if (n < 2) continue;
    const auto g0 = build_chord_diagram(L, k, 0);
    const auto g1 = build_chord_diagram(L, k, 1);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(g1.skeleton()[2 + i].crossing, g0.skeleton()[2 + (i + 1) % n].crossing);
    }
    EXPECT_THROW(build_chord_diagram(L, k, n), std::out_of_range);
  }
}

TEST(Pairing, EmptySetsGiveZero) {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<ChordMark> nc(n, {ChordSet::TowardNc, 1}), c(n, {ChordSet::TowardC, -1});
    EXPECT_EQ(pairing_combinatorial(GeneralizedChordDiagram::from_marks(nc)), 0);
    EXPECT_EQ(pairing_combinatorial(GeneralizedChordDiagram::from_marks(c)), 0);
  }
}

TEST(Pairing, TwoChordArrangements) {
  // Skeleton b_nc, b_c, then the marks. Chords cross only when the b_nc mark
  // comes first, since b_nc precedes b_c.
  const auto crossing = GeneralizedChordDiagram::from_marks({{ChordSet::TowardNc, 1}, {ChordSet::TowardC, 1}});
  const auto apart = GeneralizedChordDiagram::from_marks({{ChordSet::TowardC, 1}, {ChordSet::TowardNc, 1}});
  const auto r = realize_geometric(crossing);
  ASSERT_EQ(r.chords.size(), 2u);
  EXPECT_TRUE(segment_intersection(r.chords[0].from, r.chords[0].to, r.chords[1].from, r.chords[1].to).has_value());
  EXPECT_EQ(pairing_geometric(apart), 0);
  EXPECT_EQ(pairing_combinatorial(apart), 0);
  // Two positive crossings give -1 under the pinned convention; reversing
  // either chord flips it.
  EXPECT_EQ(pairing_combinatorial(crossing), -1);
  EXPECT_EQ(pairing_combinatorial(GeneralizedChordDiagram::from_marks({{ChordSet::TowardNc, -1}, {ChordSet::TowardC, 1}})),
            1);
  EXPECT_EQ(pairing_combinatorial(GeneralizedChordDiagram::from_marks({{ChordSet::TowardNc, 1}, {ChordSet::TowardC, -1}})),
            1);
}

TEST(Pairing, ExhaustiveSmallDiagrams) {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t codes = 1;
    for (std::size_t i = 0; i < n; ++i) codes *= 4;
    for (std::size_t code = 0; code < codes; ++code) {
      const auto g = GeneralizedChordDiagram::from_marks(marks_from_code(n, code));
      ASSERT_EQ(pairing_combinatorial(g), pairing_geometric(g)) << "n=" << n << " code=" << code;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 5461u);
}

TEST(Pairing, SeparationMatchesSegmentCrossing) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::size_t codes = 1;
    for (std::size_t i = 0; i < n; ++i) codes *= 4;
    for (std::size_t code = 0; code < codes; code += 3) {
      const auto g = GeneralizedChordDiagram::from_marks(marks_from_code(n, code));
      const auto r = realize_geometric(g);
      for (const auto& a : r.chords) {
        for (const auto& b : r.chords) {
          if (a.chord >= b.chord) continue;
          const auto& ca = g.chords()[a.chord];
          const auto& cb = g.chords()[b.chord];
          const bool meet = segment_intersection(a.from, a.to, b.from, b.to).has_value();
          if (ca.set == cb.set) {
            EXPECT_FALSE(meet);
          } else {
            EXPECT_EQ(meet, separated(ca.crossing_end, ca.base_end, cb.crossing_end, cb.base_end));
          }
        }
      }
    }
  }
}

TEST(Pairing, RandomLargerDiagramsAndRotations) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 7 + rng() % 14;
    std::vector<ChordMark> marks;
    for (std::size_t j = 0; j < n; ++j) marks.push_back({rng() % 2 ? ChordSet::TowardC : ChordSet::TowardNc, rng() % 2 ? 1 : -1});
    const auto g = GeneralizedChordDiagram::from_marks(marks);
    const auto expected = pairing_combinatorial(g);
    EXPECT_EQ(pairing_geometric(g), expected);
    EXPECT_EQ(pairing_geometric(g, 1 + rng() % n), expected);
  }
}

TEST(Pairing, LinkDiagramsAgree) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const LinkDiagram L = link(seed, seed % 2 ? LinkingMode::Unlinked : LinkingMode::Free);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto g = build_chord_diagram(L, k);
      EXPECT_EQ(pairing_combinatorial(g), pairing_geometric(g));
    }
  }
}

TEST(Pairing, RejectsBadSign) {
  EXPECT_THROW(GeneralizedChordDiagram::from_marks({{ChordSet::TowardNc, 0}}), ChordDiagramError);
}
