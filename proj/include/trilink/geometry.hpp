#pragma once

// Exact planar primitives over rational coordinates.
//
// Every predicate in this header is evaluated exactly with GMP rationals.
// Degenerate configurations (collinear overlaps, vertex incidences, triple
// points) are reported as errors and never perturbed away.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trilink {

using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

struct Point2 {
  Rational x;
  Rational y;

  Point2() = default;
  Point2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {
    x.canonicalize();
    y.canonicalize();
  }
  Point2(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
};

// Lexicographic (x, then y); used for grouping coincident points.
struct PointLess {
  bool operator()(const Point2& a, const Point2& b) const {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline std::string to_string(const Point2& p) {
  return "(" + p.x.get_str() + ", " + p.y.get_str() + ")";
}

inline Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

// (a - o) x (b - o); positive iff o, a, b turn left.
inline Rational orient(const Point2& o, const Point2& a, const Point2& b) {
  return cross(a - o, b - o);
}

enum class GeometryErrorKind { Degenerate, NotSimple, PointOnCurve, InvalidPolyline };

class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GeometryErrorKind kind() const noexcept { return kind_; }

 private:
  GeometryErrorKind kind_;
};

// A closed, oriented polygonal curve. Vertex order is the orientation; the
// last vertex connects back to the first.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
      throw GeometryError(GeometryErrorKind::InvalidPolyline,
                          "polyline needs at least 3 vertices, got " +
                              std::to_string(vertices_.size()));
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] == vertices_[(i + 1) % vertices_.size()]) {
        throw GeometryError(GeometryErrorKind::InvalidPolyline,
                            "zero-length edge at vertex " + std::to_string(i) + " " +
                                to_string(vertices_[i]));
      }
    }
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t segment_count() const noexcept { return vertices_.size(); }
  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const Point2& segment_start(std::size_t s) const { return vertices_[s]; }
  const Point2& segment_end(std::size_t s) const { return vertices_[(s + 1) % vertices_.size()]; }
  Point2 direction(std::size_t s) const { return segment_end(s) - segment_start(s); }

  Polyline reversed() const {
    std::vector<Point2> r(vertices_.rbegin(), vertices_.rend());
    return Polyline(std::move(r));
  }

  friend bool operator==(const Polyline& a, const Polyline& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<Point2> vertices_;
};

// Position along a polyline: segment index plus parameter in [0, 1).
struct CurvePosition {
  std::size_t segment = 0;
  Rational t;

  friend bool operator==(const CurvePosition& a, const CurvePosition& b) {
    return a.segment == b.segment && a.t == b.t;
  }
  friend bool operator<(const CurvePosition& a, const CurvePosition& b) {
    if (a.segment != b.segment) return a.segment < b.segment;
    return a.t < b.t;
  }
};

inline Point2 point_at(const Polyline& c, const CurvePosition& pos) {
  const Point2& a = c.segment_start(pos.segment);
  const Point2& b = c.segment_end(pos.segment);
  return {a.x + pos.t * (b.x - a.x), a.y + pos.t * (b.y - a.y)};
}

struct CrossingPoint {
  Point2 position;
  CurvePosition on_a;
  CurvePosition on_b;
  // +1 iff curve b crosses curve a from right to left.
  int epsilon = 0;
};

struct SegmentHit {
  Point2 point;
  Rational t;
  Rational u;
};

enum class SegmentRelation { Disjoint, Transversal, Collinear, Touching };

struct SegmentClassification {
  SegmentRelation relation = SegmentRelation::Disjoint;
  SegmentHit hit;  // valid for Transversal and Touching
};

// Classifies the pair of closed segments [p0,p1] and [q0,q1] without throwing.
inline SegmentClassification classify_segments(const Point2& p0, const Point2& p1, const Point2& q0,
                                               const Point2& q1) {
  const Point2 r = p1 - p0;
  const Point2 s = q1 - q0;
  const Point2 qp = q0 - p0;
  const Rational denom = cross(r, s);
  SegmentClassification out;
  if (sgn(denom) == 0) {
    if (sgn(cross(qp, r)) != 0) return out;  // parallel, distinct lines
    // Collinear: compare projections onto r.
    const Rational rr = dot(r, r);
    Rational a = dot(qp, r) / rr;
    Rational b = dot(q1 - p0, r) / rr;
    if (a > b) std::swap(a, b);
    if (b < 0 || a > 1) return out;
    out.relation = SegmentRelation::Collinear;
    return out;
  }
  Rational t = cross(qp, s) / denom;
  Rational u = cross(qp, r) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return out;
  out.hit.point = Point2(p0.x + t * r.x, p0.y + t * r.y);
  out.hit.t = std::move(t);
  out.hit.u = std::move(u);
  const bool interior = out.hit.t > 0 && out.hit.t < 1 && out.hit.u > 0 && out.hit.u < 1;
  out.relation = interior ? SegmentRelation::Transversal : SegmentRelation::Touching;
  return out;
}

// Unique transversal interior intersection of two segments, or nullopt if they
// are disjoint. Collinear overlap, endpoint incidence and zero-length segments
// raise Degenerate.
inline std::optional<SegmentHit> segment_intersection(const Point2& p0, const Point2& p1,
                                                      const Point2& q0, const Point2& q1) {
  if (p0 == p1 || q0 == q1) {
    throw GeometryError(GeometryErrorKind::Degenerate, "zero-length segment");
  }
  auto c = classify_segments(p0, p1, q0, q1);
  switch (c.relation) {
    case SegmentRelation::Disjoint:
      return std::nullopt;
    case SegmentRelation::Transversal:
      return c.hit;
    case SegmentRelation::Collinear:
      throw GeometryError(GeometryErrorKind::Degenerate,
                          "collinear overlap between segments " + to_string(p0) + "-" +
                              to_string(p1) + " and " + to_string(q0) + "-" + to_string(q1));
    case SegmentRelation::Touching:
      break;
  }
  throw GeometryError(GeometryErrorKind::Degenerate,
                      "endpoint incidence at " + to_string(c.hit.point));
}

namespace detail {

inline bool adjacent_segments(std::size_t n, std::size_t i, std::size_t j) {
  return (i + 1) % n == j || (j + 1) % n == i;
}

// Adjacent segments share a vertex; they are only degenerate if the curve
// folds back on itself (antiparallel, collinear directions).
inline bool folds_back(const Polyline& c, std::size_t first) {
  const Point2 d0 = c.direction(first);
  const Point2 d1 = c.direction((first + 1) % c.size());
  return sgn(cross(d0, d1)) == 0 && sgn(dot(d0, d1)) < 0;
}

inline void reject_coincident(const std::vector<CrossingPoint>& found, const std::string& what) {
  std::map<Point2, int, PointLess> seen;
  for (const auto& c : found) {
    if (++seen[c.position] > 1) {
      throw GeometryError(GeometryErrorKind::Degenerate,
                          "triple incidence at " + to_string(c.position) + " (" + what + ")");
    }
  }
}

inline void sort_along_a(std::vector<CrossingPoint>& found) {
  std::sort(found.begin(), found.end(),
            [](const CrossingPoint& l, const CrossingPoint& r) { return l.on_a < r.on_a; });
}

}  // namespace detail

// All transversal crossings between two distinct curves, ordered along a.
inline std::vector<CrossingPoint> curve_intersections(const Polyline& a, const Polyline& b) {
  std::vector<CrossingPoint> found;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto hit = segment_intersection(a.segment_start(i), a.segment_end(i), b.segment_start(j),
                                      b.segment_end(j));
      if (!hit) continue;
      found.push_back({hit->point, {i, hit->t}, {j, hit->u}, sign_of(cross(a.direction(i), b.direction(j)))});
    }
  }
  detail::reject_coincident(found, "curve pair");
  detail::sort_along_a(found);
  return found;
}

// Double points of a single curve, each reported once with on_a earlier than
// on_b along the curve.
inline std::vector<CrossingPoint> self_intersections(const Polyline& a) {
  std::vector<CrossingPoint> found;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (detail::folds_back(a, i)) {
      throw GeometryError(GeometryErrorKind::Degenerate,
                          "curve folds back at vertex " + to_string(a.vertex(i + 1)));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (detail::adjacent_segments(n, i, j)) continue;
      auto hit = segment_intersection(a.segment_start(i), a.segment_end(i), a.segment_start(j),
                                      a.segment_end(j));
      if (!hit) continue;
      found.push_back({hit->point, {i, hit->t}, {j, hit->u}, sign_of(cross(a.direction(i), a.direction(j)))});
    }
  }
  detail::reject_coincident(found, "self crossing");
  detail::sort_along_a(found);
  return found;
}

// Shoelace area without any simplicity check. Twice-covered regions count
// twice; positive for anticlockwise curves.
inline Rational shoelace_area(std::span<const Point2> vertices) {
  Rational twice = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return twice / 2;
}

inline Rational signed_area(const Polyline& a) {
  if (!self_intersections(a).empty()) {
    throw GeometryError(GeometryErrorKind::NotSimple, "signed_area needs a simple curve");
  }
  return shoelace_area(a.vertices());
}

inline bool point_on_segment(const Point2& p, const Point2& s0, const Point2& s1) {
  if (sgn(orient(s0, s1, p)) != 0) return false;
  const Rational lo_x = std::min(s0.x, s1.x), hi_x = std::max(s0.x, s1.x);
  const Rational lo_y = std::min(s0.y, s1.y), hi_y = std::max(s0.y, s1.y);
  return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
}

// Winding number of a closed vertex loop around p. Repeated vertices (pinch
// points) are fine; p must not lie on the loop.
inline int winding_number(const Point2& p, std::span<const Point2> loop) {
  int w = 0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = loop[i];
    const Point2& b = loop[(i + 1) % n];
    if (point_on_segment(p, a, b)) {
      throw GeometryError(GeometryErrorKind::PointOnCurve, "point " + to_string(p) + " lies on the curve");
    }
    if (a.y <= p.y) {
      if (b.y > p.y && sgn(orient(a, b, p)) > 0) ++w;
    } else if (b.y <= p.y && sgn(orient(a, b, p)) < 0) {
      --w;
    }
  }
  return w;
}

inline int winding_number(const Point2& p, const Polyline& a) {
  return winding_number(p, std::span<const Point2>(a.vertices()));
}

enum class ViolationKind { FoldBack, CollinearOverlap, VertexIncidence, TriplePoint };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::FoldBack: return "FoldBack";
    case ViolationKind::CollinearOverlap: return "CollinearOverlap";
    case ViolationKind::VertexIncidence: return "VertexIncidence";
    case ViolationKind::TriplePoint: return "TriplePoint";
  }
  return "?";
}

struct SegmentRef {
  std::size_t curve = 0;
  std::size_t segment = 0;
};

struct Violation {
  ViolationKind kind;
  Point2 location;
  std::vector<SegmentRef> segments;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const Violation& v) { return v.kind == k; });
  }
  std::string summary() const {
    std::ostringstream os;
    for (const auto& v : violations) {
      os << to_string(v.kind) << " at " << to_string(v.location) << " [";
      for (std::size_t i = 0; i < v.segments.size(); ++i) {
        os << (i ? ", " : "") << "c" << v.segments[i].curve << ":s" << v.segments[i].segment;
      }
      os << "]\n";
    }
    return os.str();
  }
};

// Accepts iff every incidence among the curves is a transversal double point.
inline ValidationReport validate_general_position(std::span<const Polyline> curves) {
  ValidationReport report;
  std::vector<SegmentRef> segs;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    for (std::size_t s = 0; s < curves[c].size(); ++s) segs.push_back({c, s});
  }
  auto start = [&](const SegmentRef& r) -> const Point2& { return curves[r.curve].segment_start(r.segment); };
  auto end = [&](const SegmentRef& r) -> const Point2& { return curves[r.curve].segment_end(r.segment); };

  std::map<Point2, std::vector<SegmentRef>, PointLess> crossings;
  for (std::size_t x = 0; x < segs.size(); ++x) {
    for (std::size_t y = x + 1; y < segs.size(); ++y) {
      const SegmentRef& a = segs[x];
      const SegmentRef& b = segs[y];
      if (a.curve == b.curve && detail::adjacent_segments(curves[a.curve].size(), a.segment, b.segment)) {
        // The shared vertex is expected; only a fold-back is degenerate. A
        // triangle has every pair adjacent, so check both orientations.
        const Polyline& c = curves[a.curve];
        const std::size_t first = (a.segment + 1) % c.size() == b.segment ? a.segment : b.segment;
        if (detail::folds_back(c, first)) {
          report.violations.push_back({ViolationKind::FoldBack, c.segment_end(first), {a, b}});
        }
        continue;
      }
      auto cls = classify_segments(start(a), end(a), start(b), end(b));
      switch (cls.relation) {
        case SegmentRelation::Disjoint:
          break;
        case SegmentRelation::Collinear:
          report.violations.push_back({ViolationKind::CollinearOverlap, start(a), {a, b}});
          break;
        case SegmentRelation::Touching:
          report.violations.push_back({ViolationKind::VertexIncidence, cls.hit.point, {a, b}});
          break;
        case SegmentRelation::Transversal:
          crossings[cls.hit.point].push_back(a);
          crossings[cls.hit.point].push_back(b);
          break;
      }
    }
  }
  for (auto& [point, refs] : crossings) {
    if (refs.size() > 2) {
      std::sort(refs.begin(), refs.end(), [](const SegmentRef& l, const SegmentRef& r) {
        return std::pair(l.curve, l.segment) < std::pair(r.curve, r.segment);
      });
      refs.erase(std::unique(refs.begin(), refs.end(),
                             [](const SegmentRef& l, const SegmentRef& r) {
                               return l.curve == r.curve && l.segment == r.segment;
                             }),
                 refs.end());
      report.violations.push_back({ViolationKind::TriplePoint, point, refs});
    }
  }
  return report;
}

inline ValidationReport validate_general_position(const std::vector<Polyline>& curves) {
  return validate_general_position(std::span<const Polyline>(curves));
}

}  // namespace trilink
