#include <trilink/geometry.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace trilink;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Total turning angle seen from p, in units of full turns.
int winding_by_angles(const Point2& p, const std::vector<Point2>& loop) {
  double total = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2 a = loop[i] - p;
    const Point2 b = loop[(i + 1) % loop.size()] - p;
    total += std::atan2(cross(a, b).get_d(), dot(a, b).get_d());
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

}  // namespace

namespace trilink {
void PrintTo(const Point2& p, std::ostream* os) { *os << to_string(p); }
}  // namespace trilink

TEST(Segments, TransversalHitIsExact) {
  // 4t = 1 + 2u and 2t = 2 - 4u give t = 2/5, u = 3/10.
  auto hit = segment_intersection({0, 0}, {4, 2}, {1, 2}, {3, -2});
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->point, Point2(q(8, 5), q(4, 5)));
  EXPECT_EQ(hit->t, q(2, 5));
  EXPECT_EQ(hit->u, q(3, 10));
}

TEST(Segments, DisjointAndParallel) {
  EXPECT_FALSE(segment_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}).has_value());
  EXPECT_FALSE(segment_intersection({0, 0}, {1, 1}, {3, 0}, {2, 5}).has_value());
  EXPECT_FALSE(segment_intersection({0, 0}, {1, 0}, {2, 0}, {3, 0}).has_value());
}

TEST(Segments, DegenerateCasesThrow) {
  auto expect_degenerate = [](Point2 a, Point2 b, Point2 c, Point2 d) {
    try {
      segment_intersection(a, b, c, d);
      ADD_FAILURE() << "no throw";
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.kind(), GeometryErrorKind::Degenerate);
    }
  };
  expect_degenerate({0, 0}, {2, 0}, {1, 0}, {3, 0});   // collinear overlap
  expect_degenerate({0, 0}, {2, 0}, {1, 0}, {1, 5});   // endpoint on interior
  expect_degenerate({0, 0}, {2, 0}, {2, 0}, {3, 4});   // shared endpoint
  expect_degenerate({0, 0}, {0, 0}, {1, 0}, {1, 5});   // zero length
}

TEST(Segments, ClassifyDoesNotThrow) {
  EXPECT_EQ(classify_segments({0, 0}, {2, 0}, {1, 0}, {3, 0}).relation, SegmentRelation::Collinear);
  EXPECT_EQ(classify_segments({0, 0}, {2, 0}, {1, 0}, {1, 5}).relation, SegmentRelation::Touching);
  EXPECT_EQ(classify_segments({0, 0}, {2, 2}, {0, 2}, {2, 0}).relation, SegmentRelation::Transversal);
}

TEST(Segments, RandomHitsLieOnBothSegments) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-50, 50);
  int hits = 0;
  for (int i = 0; i < 2000; ++i) {
    Point2 p0{d(rng), d(rng)}, p1{d(rng), d(rng)}, q0{d(rng), d(rng)}, q1{d(rng), d(rng)};
    auto c = classify_segments(p0, p1, q0, q1);
    if (c.relation != SegmentRelation::Transversal) continue;
    ++hits;
    EXPECT_EQ(sgn(orient(p0, p1, c.hit.point)), 0);
    EXPECT_EQ(sgn(orient(q0, q1, c.hit.point)), 0);
    EXPECT_EQ(c.hit.point, Point2(q0.x + c.hit.u * (q1.x - q0.x), q0.y + c.hit.u * (q1.y - q0.y)));
  }
  EXPECT_GT(hits, 100);
}

TEST(Polyline, RejectsBadInput) {
  EXPECT_THROW(Polyline({{0, 0}, {1, 0}}), GeometryError);
  EXPECT_THROW(Polyline({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), GeometryError);
  EXPECT_THROW(Polyline({{0, 0}, {1, 0}, {0, 1}, {0, 0}}), GeometryError);
}

TEST(Area, TriangleAndOrientation) {
  const Polyline t({{0, 0}, {4, 0}, {0, 3}});
  EXPECT_EQ(signed_area(t), 6);
  EXPECT_EQ(signed_area(t.reversed()), -6);
}

TEST(Area, SelfIntersectingCurveIsRejected) {
  const Polyline bowtie({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  try {
    signed_area(bowtie);
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryErrorKind::NotSimple);
  }
  EXPECT_EQ(shoelace_area(std::span<const Point2>(bowtie.vertices())), 0);
}

TEST(Winding, SquareAndDoubledLoop) {
  const Polyline sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  EXPECT_EQ(winding_number({2, 2}, sq), 1);
  EXPECT_EQ(winding_number({2, 2}, sq.reversed()), -1);
  EXPECT_EQ(winding_number({5, 2}, sq), 0);
  const std::vector<Point2> twice{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {0, 0}, {4, 0}, {4, 4}, {0, 4}};
  EXPECT_EQ(winding_number({1, 3}, std::span<const Point2>(twice)), 2);
}

TEST(Winding, PointOnCurveThrows) {
  const Polyline sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  try {
    winding_number({4, 1}, sq);
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryErrorKind::PointOnCurve);
  }
  EXPECT_THROW(winding_number({0, 0}, sq), GeometryError);
}

TEST(Winding, MatchesAngleSumOnRandomLoops) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-20, 20);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<Point2> loop;
    for (int k = 0; k < 7; ++k) loop.emplace_back(d(rng), d(rng));
    const Point2 p(q(2 * d(rng) + 1, 2), q(2 * d(rng) + 1, 3));
    int w = 0;
    try {
      w = winding_number(p, std::span<const Point2>(loop));
    } catch (const GeometryError&) {
      continue;
    }
    EXPECT_EQ(w, winding_by_angles(p, loop));
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(Crossings, SignIsRightToLeft) {
  const Polyline a({{-2, 0}, {2, 0}, {2, -1}, {-2, -1}});
  const Polyline b({{0, -2}, {1, 2}, {-1, 2}});
  const auto xs = curve_intersections(a, b);
  ASSERT_EQ(xs.size(), 4u);
  // Along a's top edge (heading right) b first comes down, then goes up.
  EXPECT_EQ(xs[0].position, Point2(q(-1, 2), q(0)));
  EXPECT_EQ(xs[0].epsilon, -1);
  EXPECT_EQ(xs[1].position, Point2(q(1, 2), q(0)));
  EXPECT_EQ(xs[1].epsilon, 1);
  for (const auto& x : xs) EXPECT_EQ(point_at(a, x.on_a), x.position);
  for (const auto& x : xs) EXPECT_EQ(point_at(b, x.on_b), x.position);
  for (const auto& x : curve_intersections(b, a)) EXPECT_NE(x.epsilon, 0);
}

TEST(Crossings, SelfIntersectionsOfFigureEight) {
  const Polyline eight({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  const auto xs = self_intersections(eight);
  ASSERT_EQ(xs.size(), 1u);
  EXPECT_EQ(xs[0].position, Point2(1, 1));
  EXPECT_LT(xs[0].on_a, xs[0].on_b);
}

TEST(Validation, AcceptsGeneralPosition) {
  const std::vector<Polyline> cs{Polyline({{0, 0}, {4, 0}, {4, 4}, {0, 4}}), Polyline({{2, 1}, {6, 1}, {6, 5}, {2, 5}}),
                                 Polyline({{1, -3}, {3, -3}, {3, 7}})};
  EXPECT_TRUE(validate_general_position(cs).ok()) << validate_general_position(cs).summary();
}

TEST(Validation, VertexOnAnotherCurve) {
  const std::vector<Polyline> cs{Polyline({{0, 0}, {4, 0}, {4, 4}, {0, 4}}), Polyline({{4, 2}, {6, 1}, {6, 5}}),
                                 Polyline({{10, 10}, {11, 10}, {11, 11}})};
  const auto r = validate_general_position(cs);
  EXPECT_TRUE(r.has(ViolationKind::VertexIncidence)) << r.summary();
}

TEST(Validation, TriplePoint) {
  const std::vector<Polyline> cs{Polyline({{-2, 0}, {2, 0}, {0, -3}}), Polyline({{0, -2}, {0, 2}, {-3, 3}}),
                                 Polyline({{-2, -2}, {2, 2}, {3, -3}})};
  const auto r = validate_general_position(cs);
  EXPECT_TRUE(r.has(ViolationKind::TriplePoint)) << r.summary();
}

TEST(Validation, CollinearOverlapAndFoldBack) {
  const std::vector<Polyline> overlap{Polyline({{0, 0}, {4, 0}, {4, 4}}), Polyline({{2, 0}, {6, 0}, {6, -4}}),
                                      Polyline({{10, 10}, {11, 10}, {11, 11}})};
  EXPECT_TRUE(validate_general_position(overlap).has(ViolationKind::CollinearOverlap));
  const std::vector<Polyline> fold{Polyline({{0, 0}, {4, 0}, {2, 0}, {2, 3}}), Polyline({{10, 10}, {11, 10}, {11, 11}}),
                                   Polyline({{20, 10}, {21, 10}, {21, 11}})};
  EXPECT_TRUE(validate_general_position(fold).has(ViolationKind::FoldBack));
}
