#pragma once

// Generalized chord diagrams G_{L_k} built from the over-crossings of one
// link component, and the signed intersection pairing between their two
// chord families.
//
// For component k the skeleton carries two base points: b_nc (named after
// component k+1) and b_c (named after component k-1), adjacent along the
// orientation with b_nc first. Crossings where k passes over k+1 are joined
// to b_nc; crossings where k passes over k-1 are joined to b_c. A chord
// points from its crossing to its base point iff the crossing sign is +1.

#include <trilink/link_diagram.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilink {

// Global orientation constant of the chord intersection sign. The raw sign
// is +1 when the b_nc chord crosses the b_c chord from right to left. With
// b_nc placed before b_c, +1 is the value under which the triple linking
// congruence holds on every generated diagram; -1 fails it whenever
// Delta = 0 and the pairings are nonzero.
inline constexpr int kChordSignConvention = 1;

enum class ChordSet { TowardNc, TowardC };

inline const char* to_string(ChordSet s) { return s == ChordSet::TowardNc ? "T_nc" : "T_c"; }

struct SkeletonPoint {
  enum class Kind { Marked, BaseNc, BaseC };
  Kind kind = Kind::Marked;
  int gamma = 0;                    // marked points only
  std::size_t under_component = 0; // marked points only
  std::optional<std::size_t> crossing;  // index into the link's crossings, when built from a link

  bool is_base() const { return kind != Kind::Marked; }
};

struct OrientedChord {
  std::size_t crossing_end = 0;  // skeleton index of the marked point
  std::size_t base_end = 0;      // skeleton index of the base point
  ChordSet set = ChordSet::TowardNc;
  bool toward_base = true;

  std::size_t from() const { return toward_base ? crossing_end : base_end; }
  std::size_t to() const { return toward_base ? base_end : crossing_end; }
};

struct ChordMark {
  ChordSet set = ChordSet::TowardNc;
  int gamma = 1;
};

class ChordDiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GeneralizedChordDiagram {
 public:
  GeneralizedChordDiagram() = default;

  // Skeleton b_nc, b_c, then the marks in orientation order.
  static GeneralizedChordDiagram from_marks(const std::vector<ChordMark>& marks, std::size_t component = 0) {
    GeneralizedChordDiagram g;
    g.component_ = component;
    g.skeleton_.push_back({SkeletonPoint::Kind::BaseNc, 0, 0, std::nullopt});
    g.skeleton_.push_back({SkeletonPoint::Kind::BaseC, 0, 0, std::nullopt});
    for (const auto& m : marks) {
      if (m.gamma != 1 && m.gamma != -1) throw ChordDiagramError("crossing sign must be +1 or -1");
      const std::size_t under = m.set == ChordSet::TowardNc ? next_component(component) : prev_component(component);
      g.skeleton_.push_back({SkeletonPoint::Kind::Marked, m.gamma, under, std::nullopt});
    }
    g.connect();
    return g;
  }

  std::size_t component() const noexcept { return component_; }
  std::size_t nc_component() const noexcept { return next_component(component_); }
  std::size_t c_component() const noexcept { return prev_component(component_); }
  const std::vector<SkeletonPoint>& skeleton() const noexcept { return skeleton_; }
  const std::vector<OrientedChord>& chords() const noexcept { return chords_; }
  std::size_t base_nc_index() const noexcept { return 0; }
  std::size_t base_c_index() const noexcept { return 1; }

  std::size_t count(ChordSet s) const {
    return static_cast<std::size_t>(std::count_if(chords_.begin(), chords_.end(),
                                                  [s](const OrientedChord& c) { return c.set == s; }));
  }

  // Throws ChordDiagramError when a structural invariant is broken.
  void validate() const {
    std::size_t nc = 0, c = 0;
    for (std::size_t i = 0; i < skeleton_.size(); ++i) {
      if (skeleton_[i].kind == SkeletonPoint::Kind::BaseNc) ++nc;
      if (skeleton_[i].kind == SkeletonPoint::Kind::BaseC) ++c;
    }
    if (nc != 1 || c != 1) throw ChordDiagramError("skeleton needs exactly one b_nc and one b_c");
    // b_nc is immediately followed by b_c along the orientation.
    if (skeleton_[base_nc_index()].kind != SkeletonPoint::Kind::BaseNc ||
        skeleton_[base_c_index()].kind != SkeletonPoint::Kind::BaseC) {
      throw ChordDiagramError("base points must be adjacent, b_nc first");
    }
    std::vector<int> hits(skeleton_.size(), 0);
    for (const auto& ch : chords_) {
      const auto& m = skeleton_.at(ch.crossing_end);
      if (m.is_base()) throw ChordDiagramError("chord starts at a base point");
      ++hits[ch.crossing_end];
      const auto expect = ch.set == ChordSet::TowardNc ? base_nc_index() : base_c_index();
      if (ch.base_end != expect) throw ChordDiagramError("chord attached to the wrong base point");
      if (ch.toward_base != (m.gamma == 1)) throw ChordDiagramError("chord orientation disagrees with crossing sign");
    }
    for (std::size_t i = 0; i < skeleton_.size(); ++i) {
      if (!skeleton_[i].is_base() && hits[i] != 1) throw ChordDiagramError("marked point without exactly one chord");
    }
  }

 private:
  friend GeneralizedChordDiagram build_chord_diagram(const LinkDiagram&, std::size_t, std::optional<std::size_t>);

  void connect() {
    chords_.clear();
    for (std::size_t i = 0; i < skeleton_.size(); ++i) {
      const auto& p = skeleton_[i];
      if (p.is_base()) continue;
      const ChordSet set = p.under_component == nc_component() ? ChordSet::TowardNc : ChordSet::TowardC;
      chords_.push_back({i, set == ChordSet::TowardNc ? base_nc_index() : base_c_index(), set, p.gamma == 1});
    }
  }

  std::size_t component_ = 0;
  std::vector<SkeletonPoint> skeleton_;
  std::vector<OrientedChord> chords_;
};

// Number of gaps between consecutive over-crossings of component k; valid
// gap choices are 0 .. count-1, gap g following the g-th over-crossing.
inline std::size_t gap_count(const LinkDiagram& L, std::size_t k) { return over_crossing_sets(L, k).all.size(); }

// Builds G_{L_k}. The base points sit in the gap following over-crossing
// `gap_choice` (default: the last one, i.e. the gap containing vertex 0).
inline GeneralizedChordDiagram build_chord_diagram(const LinkDiagram& L, std::size_t k,
                                                   std::optional<std::size_t> gap_choice = std::nullopt) {
  const OverSets sets = over_crossing_sets(L, k);
  const std::size_t n = sets.all.size();
  GeneralizedChordDiagram g;
  g.component_ = k;
  g.skeleton_.push_back({SkeletonPoint::Kind::BaseNc, 0, 0, std::nullopt});
  g.skeleton_.push_back({SkeletonPoint::Kind::BaseC, 0, 0, std::nullopt});
  if (n > 0) {
    const std::size_t gap = gap_choice.value_or(n - 1);
    if (gap >= n) {
      throw std::out_of_range("gap choice " + std::to_string(gap) + " out of range for " + std::to_string(n) +
                              " over-crossings");
    }
    for (std::size_t r = 1; r <= n; ++r) {
      const auto& o = sets.all[(gap + r) % n];
      g.skeleton_.push_back({SkeletonPoint::Kind::Marked, o.gamma, o.under_component, o.crossing});
    }
  }
  g.connect();
  return g;
}

struct RealizedChord {
  std::size_t chord = 0;  // index into GeneralizedChordDiagram::chords()
  ChordSet set = ChordSet::TowardNc;
  Point2 from;
  Point2 to;
};

struct ChordRealization {
  std::vector<Point2> skeleton;  // marked-point positions; base slots hold the base location
  std::vector<RealizedChord> chords;
};

class RealizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Exact point on the unit circle near angle phi in (-pi, pi), from the
// rational parametrisation with t ~ tan(phi / 2).
inline std::pair<Rational, Point2> circle_point(double phi) {
  constexpr long kDen = 1L << 24;
  const Rational t(static_cast<long>(std::llround(std::tan(phi / 2) * kDen)), kDen);
  const Rational t2 = t * t;
  const Rational den = 1 + t2;
  return {t, Point2((1 - t2) / den, 2 * t / den)};
}

inline bool ccw_between(std::size_t x, std::size_t a, std::size_t b, std::size_t n) {
  const std::size_t dx = (x + n - a) % n, db = (b + n - a) % n;
  return dx > 0 && dx < db;
}

// Crossing count of an open segment set, with general-position checks.
inline bool segments_in_general_position(const std::vector<RealizedChord>& cs) {
  std::map<Point2, int, PointLess> seen;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      auto c = classify_segments(cs[i].from, cs[i].to, cs[j].from, cs[j].to);
      if (c.relation == SegmentRelation::Collinear || c.relation == SegmentRelation::Touching) return false;
      if (c.relation == SegmentRelation::Transversal && ++seen[c.hit.point] > 1) return false;
    }
  }
  return true;
}

}  // namespace detail

// Embeds the skeleton on the unit circle (anticlockwise, following the
// orientation) with marked points at near-regular positions. Chords are
// straight segments from a marked point to its own fan point on a small arc
// around its base point. Fan points are ordered so that chords sharing a
// base point never cross.
inline ChordRealization realize_geometric(const GeneralizedChordDiagram& g, std::size_t rotation = 0) {
  g.validate();
  const std::size_t n = g.skeleton().size();
  const auto& chords = g.chords();
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double jitter = 0.013 * attempt;
    const double step = 2 * std::numbers::pi / static_cast<double>(n);
    auto angle_of = [&](std::size_t slot) {
      return -std::numbers::pi + step * (static_cast<double>((slot + rotation) % n) + 0.5 + jitter);
    };

    // (angle, point) per fan or marked point, for the order check.
    std::vector<std::pair<double, Rational>> order;
    ChordRealization out;
    out.skeleton.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto [t, p] = detail::circle_point(angle_of(i));
      out.skeleton[i] = p;
      if (!g.skeleton()[i].is_base()) order.emplace_back(angle_of(i), t);
    }
    std::vector<Point2> fan_point(chords.size());
    for (std::size_t base : {g.base_nc_index(), g.base_c_index()}) {
      std::vector<std::size_t> attached;
      for (std::size_t c = 0; c < chords.size(); ++c)
        if (chords[c].base_end == base) attached.push_back(c);
      // Earliest marked point counting anticlockwise from the base gets the
      // anticlockwise-most fan point.
      std::sort(attached.begin(), attached.end(), [&](std::size_t l, std::size_t r) {
        return (chords[l].crossing_end + n - base) % n < (chords[r].crossing_end + n - base) % n;
      });
      const double half = 0.35 * step;
      const double m = static_cast<double>(attached.size());
      for (std::size_t r = 0; r < attached.size(); ++r) {
        const double phi = angle_of(base) + half * (1.0 - 2.0 * (static_cast<double>(r) + 0.5) / m);
        auto [t, p] = detail::circle_point(phi);
        fan_point[attached[r]] = p;
        order.emplace_back(phi, t);
      }
    }
    std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    bool monotone = true;
    for (std::size_t i = 1; i < order.size(); ++i) monotone = monotone && order[i - 1].second < order[i].second;
    if (!monotone) continue;

    for (std::size_t c = 0; c < chords.size(); ++c) {
      const Point2& marked = out.skeleton[chords[c].crossing_end];
      const Point2& fan = fan_point[c];
      if (chords[c].toward_base) out.chords.push_back({c, chords[c].set, marked, fan});
      else out.chords.push_back({c, chords[c].set, fan, marked});
    }
    if (!detail::segments_in_general_position(out.chords)) continue;
    for (std::size_t i = 0; i < out.chords.size(); ++i) {
      for (std::size_t j = i + 1; j < out.chords.size(); ++j) {
        if (out.chords[i].set != out.chords[j].set) continue;
        if (segment_intersection(out.chords[i].from, out.chords[i].to, out.chords[j].from, out.chords[j].to)) {
          throw RealizationFailure("same-set chords cross in the realization");
        }
      }
    }
    return out;
  }
  throw RealizationFailure("no general-position realization found");
}

// Sum of intersection signs between b_c chords and b_nc chords, measured on
// the geometric realization.
inline std::int64_t pairing_geometric(const GeneralizedChordDiagram& g, std::size_t rotation = 0) {
  const ChordRealization r = realize_geometric(g, rotation);
  std::int64_t total = 0;
  for (const auto& c : r.chords) {
    if (c.set != ChordSet::TowardC) continue;
    for (const auto& nc : r.chords) {
      if (nc.set != ChordSet::TowardNc) continue;
      if (segment_intersection(c.from, c.to, nc.from, nc.to)) {
        total += kChordSignConvention * sign_of(cross(c.to - c.from, nc.to - nc.from));
      }
    }
  }
  return total;
}

// Same value from the cyclic order alone: two chords cross iff their
// endpoints separate each other on the skeleton. The b_nc chord crosses the
// b_c chord from right to left iff its tail lies on the anticlockwise arc
// from the tail to the head of the b_c chord.
inline std::int64_t pairing_combinatorial(const GeneralizedChordDiagram& g) {
  const std::size_t n = g.skeleton().size();
  std::int64_t total = 0;
  for (const auto& c : g.chords()) {
    if (c.set != ChordSet::TowardC) continue;
    for (const auto& nc : g.chords()) {
      if (nc.set != ChordSet::TowardNc) continue;
      const bool from_inside = detail::ccw_between(nc.from(), c.from(), c.to(), n);
      const bool to_inside = detail::ccw_between(nc.to(), c.from(), c.to(), n);
      if (from_inside == to_inside) continue;
      total += kChordSignConvention * (from_inside ? 1 : -1);
    }
  }
  return total;
}

}  // namespace trilink
