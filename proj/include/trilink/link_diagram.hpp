#pragma once

// Three-component link diagrams: projections with an over/under bit at every
// crossing, crossing signs, linking numbers, and the cyclic-height link L(D).

#include <trilink/doodle.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilink {

inline constexpr std::size_t kComponents = 3;

inline std::size_t next_component(std::size_t k) { return (k + 1) % kComponents; }
inline std::size_t prev_component(std::size_t k) { return (k + kComponents - 1) % kComponents; }

// Identifies a crossing by the two segments that meet there. For a
// self-crossing comp_a == comp_b and seg_a < seg_b.
struct CrossingKey {
  std::size_t comp_a = 0;
  std::size_t seg_a = 0;
  std::size_t comp_b = 0;
  std::size_t seg_b = 0;

  friend auto operator<=>(const CrossingKey&, const CrossingKey&) = default;
};

inline std::string to_string(const CrossingKey& k) {
  return "(" + std::to_string(k.comp_a) + ", " + std::to_string(k.seg_a) + ", " + std::to_string(k.comp_b) +
         ", " + std::to_string(k.seg_b) + ")";
}

enum class Branch { A, B };

struct Crossing {
  CrossingKey key;
  CrossingPoint geometry;
  Branch over = Branch::A;
  // Standard sign: +1 iff det(over direction, under direction) > 0.
  int gamma = 0;

  std::size_t over_component() const { return over == Branch::A ? key.comp_a : key.comp_b; }
  std::size_t under_component() const { return over == Branch::A ? key.comp_b : key.comp_a; }
  const CurvePosition& over_position() const { return over == Branch::A ? geometry.on_a : geometry.on_b; }
  const CurvePosition& under_position() const { return over == Branch::A ? geometry.on_b : geometry.on_a; }
  bool is_self() const { return key.comp_a == key.comp_b; }
};

inline int crossing_sign(const CrossingPoint& geometry, Branch over) {
  return over == Branch::A ? geometry.epsilon : -geometry.epsilon;
}

struct DetectedCrossing {
  CrossingKey key;
  CrossingPoint geometry;
};

// Every crossing of a general-position family of curves, in canonical order:
// component pairs (0,0) (0,1) (0,2) (1,1) (1,2) (2,2), then along comp_a.
inline std::vector<DetectedCrossing> detect_crossings(std::span<const Polyline> curves) {
  std::vector<DetectedCrossing> out;
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a; b < curves.size(); ++b) {
      auto points = a == b ? self_intersections(curves[a]) : curve_intersections(curves[a], curves[b]);
      for (auto& p : points) {
        out.push_back({{a, p.on_a.segment, b, p.on_b.segment}, std::move(p)});
      }
    }
  }
  return out;
}

class LinkDiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;

  // `over` must name exactly the geometrically detected crossings.
  LinkDiagram(std::vector<Polyline> components, const std::map<CrossingKey, Branch>& over)
      : doodle_(std::move(components)) {
    if (doodle_.size() != kComponents) {
      throw LinkDiagramError("link diagram needs exactly 3 components");
    }
    auto detected = detect_crossings(doodle_.components());
    std::size_t matched = 0;
    for (auto& d : detected) {
      auto it = over.find(d.key);
      if (it == over.end()) {
        throw LinkDiagramError("missing over/under bit for crossing " + to_string(d.key) + " at " +
                               to_string(d.geometry.position));
      }
      ++matched;
      const int gamma = crossing_sign(d.geometry, it->second);
      crossings_.push_back({d.key, std::move(d.geometry), it->second, gamma});
    }
    if (matched != over.size()) {
      for (const auto& [key, branch] : over) {
        bool found = std::any_of(crossings_.begin(), crossings_.end(), [&](const Crossing& c) { return c.key == key; });
        if (!found) throw LinkDiagramError("crossing " + to_string(key) + " does not exist in the geometry");
      }
    }
  }

  template <class Rule>
  static LinkDiagram from_rule(std::vector<Polyline> components, Rule&& rule) {
    auto detected = detect_crossings(components);
    std::map<CrossingKey, Branch> over;
    for (const auto& d : detected) over[d.key] = rule(d);
    return LinkDiagram(std::move(components), over);
  }

  const Doodle& doodle() const noexcept { return doodle_; }
  const std::vector<Polyline>& components() const noexcept { return doodle_.components(); }
  const Polyline& component(std::size_t i) const { return doodle_.component(i); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  std::map<CrossingKey, Branch> over_bits() const {
    std::map<CrossingKey, Branch> m;
    for (const auto& c : crossings_) m[c.key] = c.over;
    return m;
  }

  // Same geometry with the over/under bit of one crossing flipped.
  LinkDiagram with_flipped(std::size_t crossing_index) const {
    auto bits = over_bits();
    auto& b = bits.at(crossings_.at(crossing_index).key);
    b = b == Branch::A ? Branch::B : Branch::A;
    return LinkDiagram(components(), bits);
  }

 private:
  Doodle doodle_;
  std::vector<Crossing> crossings_;
};

inline Doodle project_to_doodle(const LinkDiagram& L) { return L.doodle(); }

inline std::int64_t linking_number(const LinkDiagram& L, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("linking_number needs two distinct components");
  std::int64_t sum = 0;
  for (const auto& c : L.crossings()) {
    if ((c.key.comp_a == i && c.key.comp_b == j) || (c.key.comp_a == j && c.key.comp_b == i)) sum += c.gamma;
  }
  if (sum % 2 != 0) {
    throw LinkDiagramError("odd crossing-sign sum between components " + std::to_string(i) + " and " +
                           std::to_string(j));
  }
  return sum / 2;
}

// lk(0,1), lk(1,2), lk(2,0).
inline std::array<std::int64_t, 3> linking_numbers(const LinkDiagram& L) {
  return {linking_number(L, 0, 1), linking_number(L, 1, 2), linking_number(L, 2, 0)};
}

// gcd of the absolute linking numbers; gcd{0,0,0} = 0.
inline std::int64_t delta_of(std::int64_t lk01, std::int64_t lk12, std::int64_t lk20) {
  return std::gcd(std::gcd(lk01, lk12), lk20);
}

inline std::int64_t delta(const LinkDiagram& L) {
  auto lk = linking_numbers(L);
  return delta_of(lk[0], lk[1], lk[2]);
}

// Cyclic heights: C0 over C1, C1 over C2, C2 over C0. Self-crossings take
// the first branch as over.
inline LinkDiagram construct_L_of_D(const Doodle& d) {
  return LinkDiagram::from_rule(d.components(), [](const DetectedCrossing& c) {
    if (c.key.comp_a == c.key.comp_b) return Branch::A;
    return next_component(c.key.comp_a) == c.key.comp_b ? Branch::A : Branch::B;
  });
}

struct OverCrossing {
  std::size_t crossing = 0;  // index into LinkDiagram::crossings()
  std::size_t under_component = 0;
  int gamma = 0;
  CurvePosition position;  // on the over component
};

// Inter-component crossings where component k is the over branch, split by
// the under component and ordered along component k from vertex 0.
struct OverSets {
  std::size_t component = 0;
  std::vector<OverCrossing> all;          // merged traversal order
  std::vector<OverCrossing> under_next;   // under component k+1
  std::vector<OverCrossing> under_prev;   // under component k-1
};

inline OverSets over_crossing_sets(const LinkDiagram& L, std::size_t k) {
  OverSets sets;
  sets.component = k;
  const auto& xs = L.crossings();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Crossing& c = xs[i];
    if (c.is_self() || c.over_component() != k) continue;
    sets.all.push_back({i, c.under_component(), c.gamma, c.over_position()});
  }
  std::sort(sets.all.begin(), sets.all.end(),
            [](const OverCrossing& l, const OverCrossing& r) { return l.position < r.position; });
  for (const auto& o : sets.all) {
    (o.under_component == next_component(k) ? sets.under_next : sets.under_prev).push_back(o);
  }
  return sets;
}

}  // namespace trilink
