#pragma once

// Doodles, orientation-respecting smoothing, and the doodle mu-invariant.

#include <trilink/geometry.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace trilink {

// A generic immersion of closed curves in the plane with only transversal
// double points. Construction validates general position.
class Doodle {
 public:
  Doodle() = default;
  explicit Doodle(std::vector<Polyline> components) : components_(std::move(components)) {
    auto report = validate_general_position(components_);
    if (!report.ok()) {
      throw GeometryError(GeometryErrorKind::Degenerate, "doodle not in general position:\n" + report.summary());
    }
  }

  std::size_t size() const noexcept { return components_.size(); }
  const std::vector<Polyline>& components() const noexcept { return components_; }
  const Polyline& component(std::size_t i) const { return components_.at(i); }

  friend bool operator==(const Doodle& a, const Doodle& b) { return a.components_ == b.components_; }

 private:
  std::vector<Polyline> components_;
};

// Result of smoothing every self-crossing of one component. Curves are
// vertex loops; two loops (or one loop with itself) may touch at a former
// double point but never cross.
struct SmoothedFamily {
  std::size_t source_component = 0;
  std::vector<std::vector<Point2>> curves;
  // 0 for anticlockwise, 1 for clockwise.
  std::vector<int> orientation_flags;
};

namespace detail {

struct Occurrence {
  CurvePosition pos;
  std::size_t crossing;
  int branch;  // 0 = on_a, 1 = on_b
};

// Vertices met walking along `c` from `from` (exclusive) to `to` (exclusive),
// going forward and wrapping at most once.
inline void append_vertices_between(const Polyline& c, const CurvePosition& from, const CurvePosition& to,
                                    std::vector<Point2>& out) {
  if (from.segment == to.segment && from.t < to.t) return;
  const std::size_t n = c.size();
  std::size_t s = from.segment;
  do {
    s = (s + 1) % n;
    out.push_back(c.segment_start(s));
  } while (s != to.segment);
}

}  // namespace detail

// Splits the curve at every self-double-point and reconnects each incoming
// strand to the outgoing strand of the other branch.
inline SmoothedFamily smooth_curve(const Polyline& c, std::size_t source_index = 0) {
  SmoothedFamily family;
  family.source_component = source_index;
  const auto doubles = self_intersections(c);
  if (doubles.empty()) {
    family.curves.push_back(c.vertices());
  } else {
    std::vector<detail::Occurrence> occ;
    occ.reserve(doubles.size() * 2);
    for (std::size_t i = 0; i < doubles.size(); ++i) {
      occ.push_back({doubles[i].on_a, i, 0});
      occ.push_back({doubles[i].on_b, i, 1});
    }
    std::sort(occ.begin(), occ.end(),
              [](const detail::Occurrence& l, const detail::Occurrence& r) { return l.pos < r.pos; });
    const std::size_t m = occ.size();
    std::vector<std::array<std::size_t, 2>> where(doubles.size());
    for (std::size_t r = 0; r < m; ++r) where[occ[r].crossing][occ[r].branch] = r;

    // Arc r runs from occurrence r to occurrence r + 1. Arriving at
    // occurrence q, the walk leaves along the other branch of that crossing.
    std::vector<bool> used(m, false);
    for (std::size_t first = 0; first < m; ++first) {
      if (used[first]) continue;
      std::vector<Point2> loop;
      std::size_t arc = first;
      while (!used[arc]) {
        used[arc] = true;
        const std::size_t next = (arc + 1) % m;
        loop.push_back(doubles[occ[arc].crossing].position);
        detail::append_vertices_between(c, occ[arc].pos, occ[next].pos, loop);
        arc = where[occ[next].crossing][1 - occ[next].branch];
      }
      family.curves.push_back(std::move(loop));
    }
  }
  for (const auto& loop : family.curves) {
    family.orientation_flags.push_back(sgn(shoelace_area(loop)) > 0 ? 0 : 1);
  }
  return family;
}

inline SmoothedFamily smooth_component(const Doodle& d, std::size_t k) {
  return smooth_curve(d.component(k), k);
}

using Permutation3 = std::array<std::size_t, 3>;

inline constexpr Permutation3 kIdentity3{0, 1, 2};

inline int permutation_sign(const Permutation3& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

inline std::array<Permutation3, 6> all_permutations3() {
  return {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
}

// mu(C_s0, C_s1, C_s2): sum over crossings p of C_s1 and C_s2, and over the
// smoothed pieces of C_s0 enclosing p, of (-1)^n * epsilon(p).
inline std::int64_t mu_invariant(const Doodle& d, const Permutation3& sigma = kIdentity3) {
  if (d.size() != 3) {
    throw std::invalid_argument("mu_invariant needs a 3-component doodle");
  }
  const SmoothedFamily family = smooth_component(d, sigma[0]);
  const auto points = curve_intersections(d.component(sigma[1]), d.component(sigma[2]));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < family.curves.size(); ++i) {
    const int corrected = family.orientation_flags[i] ? -1 : 1;
    for (const auto& p : points) {
      if (winding_number(p.position, family.curves[i]) != 0) total += corrected * p.epsilon;
    }
  }
  return total;
}

inline Doodle with_reversed_components(const Doodle& d, std::array<bool, 3> reverse) {
  std::vector<Polyline> comps;
  for (std::size_t i = 0; i < d.size(); ++i) {
    comps.push_back(i < 3 && reverse[i] ? d.component(i).reversed() : d.component(i));
  }
  return Doodle(std::move(comps));
}

}  // namespace trilink
