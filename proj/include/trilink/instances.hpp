#pragma once

// Fixtures and seeded generators for doodles and link diagrams.

#include <trilink/link_diagram.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trilink {

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t components = 3;
  std::size_t min_vertices = 5;
  std::size_t max_vertices = 9;
  std::int64_t grid_bound = 1000;
  std::size_t max_attempts = 2000;
};

// How the over/under bits between different components are drawn.
enum class LinkingMode {
  Free,      // independent coin flips
  Unlinked,  // every pairwise linking number forced to 0
  Even,      // every pairwise linking number forced even
};

class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Portable draws on top of mt19937_64 (the std distributions are
// implementation-defined).
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (rng_() >> 63) != 0; }

 private:
  std::mt19937_64 rng_;
};

inline Point2 grid_point(double x, double y) { return {std::llround(x), std::llround(y)}; }

// Star-shaped curve winding `turns` times around its centre.
inline std::vector<Point2> star_curve(Draw& draw, const GenParams& p, std::size_t n, int turns) {
  const double b = static_cast<double>(p.grid_bound);
  const double cx = draw.uniform(-b / 3, b / 3), cy = draw.uniform(-b / 3, b / 3);
  const double radius = draw.uniform(b / 4, b / 2);
  std::vector<Point2> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = 2 * std::numbers::pi * turns * (static_cast<double>(i) + draw.uniform(-0.3, 0.3)) /
                         static_cast<double>(n);
    const double r = radius * draw.uniform(0.35, 1.0);
    v.push_back(grid_point(cx + r * std::cos(theta), cy + r * std::sin(theta)));
  }
  return v;
}

// Arbitrary closed polygon through random points of a box.
inline std::vector<Point2> scribble_curve(Draw& draw, const GenParams& p, std::size_t n) {
  const double b = static_cast<double>(p.grid_bound);
  const double cx = draw.uniform(-b / 3, b / 3), cy = draw.uniform(-b / 3, b / 3);
  const double half = draw.uniform(b / 4, b / 2);
  std::vector<Point2> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(grid_point(cx + draw.uniform(-half, half), cy + draw.uniform(-half, half)));
  return v;
}

inline Polyline random_curve(Draw& draw, const GenParams& p) {
  const auto n = static_cast<std::size_t>(
      draw.integer(static_cast<std::int64_t>(p.min_vertices), static_cast<std::int64_t>(p.max_vertices)));
  const double pick = draw.unit();
  std::vector<Point2> v = pick < 0.45   ? star_curve(draw, p, n, 1)
                          : pick < 0.7 ? star_curve(draw, p, std::max<std::size_t>(n, 5), 2)
                                       : scribble_curve(draw, p, n);
  if (draw.coin()) std::reverse(v.begin(), v.end());
  return Polyline(std::move(v));
}

inline std::vector<Polyline> random_curves(Draw& draw, const GenParams& p) {
  for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
    try {
      std::vector<Polyline> curves;
      for (std::size_t c = 0; c < p.components; ++c) curves.push_back(random_curve(draw, p));
      if (validate_general_position(curves).ok()) return curves;
    } catch (const GeometryError&) {
      // zero-length edge after rounding; draw again
    }
  }
  throw GenerationExhausted("no general-position configuration after " + std::to_string(p.max_attempts) + " attempts");
}

}  // namespace detail

inline Doodle random_doodle(const GenParams& p) {
  detail::Draw draw(p.seed);
  return Doodle(detail::random_curves(draw, p));
}

inline LinkDiagram random_link(const GenParams& p, LinkingMode mode = LinkingMode::Free) {
  detail::Draw draw(p.seed);
  auto curves = detail::random_curves(draw, p);
  if (curves.size() != kComponents) throw std::invalid_argument("random_link needs 3 components");
  const auto detected = detect_crossings(curves);
  std::map<CrossingKey, Branch> over;
  for (const auto& d : detected) over[d.key] = draw.coin() ? Branch::A : Branch::B;

  if (mode != LinkingMode::Free) {
    for (std::size_t a = 0; a < kComponents; ++a) {
      for (std::size_t b = a + 1; b < kComponents; ++b) {
        std::vector<const DetectedCrossing*> pair;
        for (const auto& d : detected)
          if (d.key.comp_a == a && d.key.comp_b == b) pair.push_back(&d);
        // lk(a, b) is the epsilon-sum over crossings where a is over.
        auto lk = [&] {
          std::int64_t s = 0;
          for (auto* d : pair)
            if (over[d->key] == Branch::A) s += d->geometry.epsilon;
          return s;
        };
        auto flip = [&](const DetectedCrossing* d) {
          auto& bit = over[d->key];
          bit = bit == Branch::A ? Branch::B : Branch::A;
        };
        if (mode == LinkingMode::Even && lk() % 2 != 0) {
          flip(pair[static_cast<std::size_t>(draw.integer(0, static_cast<std::int64_t>(pair.size()) - 1))]);
        }
        std::int64_t target = 0;
        if (mode == LinkingMode::Even) target = lk();
        else {
          while (lk() != target) {
            const int s = lk() > target ? 1 : -1;
            // Removing an s-crossing from, or adding a (-s)-crossing to, the
            // a-over set moves lk one step toward the target.
            std::vector<const DetectedCrossing*> movable;
            for (auto* d : pair) {
              const bool a_over = over[d->key] == Branch::A;
              if ((a_over && d->geometry.epsilon == s) || (!a_over && d->geometry.epsilon == -s)) movable.push_back(d);
            }
            flip(movable[static_cast<std::size_t>(draw.integer(0, static_cast<std::int64_t>(movable.size()) - 1))]);
          }
        }
      }
    }
  }
  return LinkDiagram(std::move(curves), over);
}

// Exact similarity transform plus edge subdivision.
struct IsotopyParams {
  // Per component: (edge index, split parameter) pairs, applied to the
  // original edge numbering.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> splits;
  // Rotation by the angle with cosine a/c and sine b/c, a^2 + b^2 = c^2.
  std::array<long, 3> rotation{1, 0, 1};
  Point2 translation{0, 0};
  Rational scale{1};
};

inline Polyline apply_isotopy(const Polyline& c, const std::vector<std::pair<std::size_t, Rational>>& splits,
                              const IsotopyParams& p) {
  const Rational cs(p.rotation[0], p.rotation[2]), sn(p.rotation[1], p.rotation[2]);
  auto map = [&](const Point2& q) {
    return Point2(p.scale * (cs * q.x - sn * q.y) + p.translation.x, p.scale * (sn * q.x + cs * q.y) + p.translation.y);
  };
  std::vector<Point2> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    out.push_back(map(c.segment_start(s)));
    std::vector<Rational> ts;
    for (const auto& [edge, t] : splits)
      if (edge == s) ts.push_back(t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (const auto& t : ts) out.push_back(map(point_at(c, {s, t})));
  }
  return Polyline(std::move(out));
}

inline Doodle apply_isotopy(const Doodle& d, const IsotopyParams& p) {
  if (p.rotation[0] * p.rotation[0] + p.rotation[1] * p.rotation[1] != p.rotation[2] * p.rotation[2] ||
      p.rotation[2] == 0 || sgn(p.scale) <= 0) {
    throw std::invalid_argument("isotopy needs a Pythagorean rotation and a positive scale");
  }
  std::vector<Polyline> comps;
  for (std::size_t i = 0; i < d.size(); ++i) {
    static const std::vector<std::pair<std::size_t, Rational>> none;
    comps.push_back(apply_isotopy(d.component(i), i < p.splits.size() ? p.splits[i] : none, p));
  }
  return Doodle(std::move(comps));
}

inline IsotopyParams random_isotopy(const Doodle& d, const GenParams& gp) {
  static constexpr std::array<std::array<long, 3>, 6> kTriples{
      {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}, {12, 35, 37}}};
  detail::Draw draw(gp.seed);
  IsotopyParams p;
  p.splits.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto count = draw.integer(1, 4);
    for (std::int64_t s = 0; s < count; ++s) {
      const auto edge = static_cast<std::size_t>(draw.integer(0, static_cast<std::int64_t>(d.component(i).size()) - 1));
      p.splits[i].emplace_back(edge, Rational(draw.integer(1, 12), 13));
    }
  }
  auto r = kTriples[static_cast<std::size_t>(draw.integer(0, kTriples.size() - 1))];
  if (draw.coin()) std::swap(r[0], r[1]);
  if (draw.coin()) r[0] = -r[0];
  if (draw.coin()) r[1] = -r[1];
  p.rotation = r;
  p.translation = Point2(Rational(draw.integer(-5000, 5000), draw.integer(1, 9)),
                         Rational(draw.integer(-5000, 5000), draw.integer(1, 9)));
  p.scale = Rational(draw.integer(1, 40), draw.integer(1, 40));
  p.scale.canonicalize();
  return p;
}

// Subdivision, rational rotation, translation and positive scaling.
inline Doodle perturb_isotopy(const Doodle& d, const GenParams& gp) {
  GenParams attempt = gp;
  for (std::size_t i = 0; i < gp.max_attempts; ++i, ++attempt.seed) {
    try {
      return apply_isotopy(d, random_isotopy(d, attempt));
    } catch (const GeometryError&) {
      // a split point landed on a crossing; draw again
    }
  }
  throw GenerationExhausted("perturb_isotopy found no valid subdivision");
}

namespace detail {

inline Polyline regular_polygon(double cx, double cy, double r, std::size_t n, double phase) {
  std::vector<Point2> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = phase + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    v.push_back(grid_point(cx + r * std::cos(t), cy + r * std::sin(t)));
  }
  return Polyline(std::move(v));
}

}  // namespace detail

// Three anticlockwise polygonal circles in Venn position; the standard
// projection of the Borromean rings.
inline Doodle venn_doodle() {
  return Doodle({detail::regular_polygon(0, 0, 60, 24, 0.05), detail::regular_polygon(60, 0, 60, 24, 0.11),
                 detail::regular_polygon(30, 52, 60, 24, 0.17)});
}

// Three pairwise disjoint anticlockwise squares.
inline Doodle disjoint_doodle() {
  auto square = [](long x, long y) {
    return Polyline({{x, y}, {x + 10, y}, {x + 10, y + 10}, {x, y + 10}});
  };
  return Doodle({square(0, 0), square(20, 0), square(40, 0)});
}

// Two doodles that agree outside a small disk and differ by one forbidden
// triangle move: an edge of C1 is pushed across a crossing of C2 and C3.
inline std::pair<Doodle, Doodle> forbidden_move_fixture() {
  const Polyline c2({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
  const Polyline c3({{5, 5}, {15, 5}, {15, 15}, {5, 15}});
  // C2 and C3 cross at (10, 5) and (5, 10). The first edge of C1 lies on
  // x + y = 14 (the crossing (10, 5) is enclosed) or x + y = 16 (it is not).
  const Polyline before({{7, 7}, {13, 1}, {17, 6}, {13, 12}});
  const Polyline after({{8, 8}, {14, 2}, {17, 6}, {13, 12}});
  return {Doodle({before, c2, c3}), Doodle({after, c2, c3})};
}

}  // namespace trilink
