#pragma once

// Degree-2 Magnus expansion of the Wirtinger arcs and longitudes of a link
// diagram, giving Milnor's triple linking number independently of any doodle
// or chord-diagram machinery. Also the signed-occurrence word algebra.

#include <trilink/link_diagram.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilink {

// Element of Z<<x0, x1, x2>> truncated above degree 2.
struct TruncatedSeries {
  std::int64_t c0 = 0;
  std::array<std::int64_t, 3> lin{};
  std::array<std::array<std::int64_t, 3>, 3> quad{};  // quad[a][b] multiplies x_a x_b

  static TruncatedSeries one() {
    TruncatedSeries s;
    s.c0 = 1;
    return s;
  }
  // 1 + x_c
  static TruncatedSeries generator(std::size_t c) {
    TruncatedSeries s = one();
    s.lin.at(c) = 1;
    return s;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r;
    r.c0 = a.c0 * b.c0;
    for (std::size_t i = 0; i < 3; ++i) r.lin[i] = a.c0 * b.lin[i] + a.lin[i] * b.c0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        r.quad[i][j] = a.c0 * b.quad[i][j] + a.quad[i][j] * b.c0 + a.lin[i] * b.lin[j];
    return r;
  }
};

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inverse of 1 + u: 1 - u + u^2 in the truncation.
inline TruncatedSeries series_inv(const TruncatedSeries& a) {
  if (a.c0 != 1) throw NotInvertible("series_inv needs constant term 1, got " + std::to_string(a.c0));
  TruncatedSeries r = TruncatedSeries::one();
  for (std::size_t i = 0; i < 3; ++i) r.lin[i] = -a.lin[i];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.quad[i][j] = -a.quad[i][j] + a.lin[i] * a.lin[j];
  return r;
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

inline TruncatedSeries series_pow(const TruncatedSeries& a, int exponent) {
  if (exponent == 1) return a;
  if (exponent == -1) return series_inv(a);
  throw std::invalid_argument("only exponents +1 and -1 occur in Wirtinger words");
}

// Wirtinger arc: the stretch of a component between consecutive under-passes.
struct Arc {
  std::size_t component = 0;
  std::size_t index = 0;
  TruncatedSeries expansion;
};

namespace detail {

// Under-passes of component c (inter-component and self), ordered along c.
inline std::vector<std::size_t> under_passes(const LinkDiagram& L, std::size_t c) {
  std::vector<std::size_t> idx;
  const auto& xs = L.crossings();
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i].under_component() == c) idx.push_back(i);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t l, std::size_t r) { return xs[l].under_position() < xs[r].under_position(); });
  return idx;
}

// Arc r of a component with m under-passes runs from under-pass r-1 to
// under-pass r; arc 0 wraps through vertex 0.
inline std::size_t arc_containing(const LinkDiagram& L, const std::vector<std::size_t>& unders,
                                  const CurvePosition& pos) {
  if (unders.empty()) return 0;
  std::size_t before = 0;
  for (std::size_t u : unders)
    if (L.crossings()[u].under_position() < pos) ++before;
  return before % unders.size();
}

}  // namespace detail

using BaseArcs = std::array<std::size_t, 3>;

// Arc expansions per component. The base arc of component c gets 1 + x_c;
// passing under an arc of component d with crossing sign s conjugates the
// running meridian, adding s * [x_d, x_c] to the degree-2 part.
inline std::vector<std::vector<Arc>> arc_expansions(const LinkDiagram& L, const BaseArcs& base = {0, 0, 0}) {
  std::vector<std::vector<Arc>> arcs(kComponents);
  for (std::size_t c = 0; c < kComponents; ++c) {
    const auto unders = detail::under_passes(L, c);
    const std::size_t m = std::max<std::size_t>(unders.size(), 1);
    arcs[c].resize(m);
    const std::size_t b = base[c] % m;
    TruncatedSeries current = TruncatedSeries::generator(c);
    for (std::size_t step = 0; step < m; ++step) {
      const std::size_t r = (b + step) % m;
      arcs[c][r] = {c, r, current};
      if (unders.empty()) break;
      // Leaving arc r through under-pass r.
      const Crossing& x = L.crossings()[unders[r]];
      const std::size_t d = x.over_component();
      current.quad[d][c] += x.gamma;
      current.quad[c][d] -= x.gamma;
    }
  }
  return arcs;
}

// Magnus expansion of the longitude of component k read from its base arc.
// Arcs are conjugated on the left as the walk proceeds, so the longitude
// commuting with the base meridian is the product of (over-arc)^(sign) with
// the latest under-pass leftmost.
inline TruncatedSeries longitude_expansion(const LinkDiagram& L, std::size_t k, const BaseArcs& base = {0, 0, 0}) {
  const auto arcs = arc_expansions(L, base);
  std::array<std::vector<std::size_t>, 3> unders;
  for (std::size_t c = 0; c < kComponents; ++c) unders[c] = detail::under_passes(L, c);
  TruncatedSeries lon = TruncatedSeries::one();
  const std::size_t m = unders[k].size();
  if (m == 0) return lon;
  const std::size_t b = base[k] % m;
  for (std::size_t step = 0; step < m; ++step) {
    const Crossing& x = L.crossings()[unders[k][(b + step) % m]];
    const std::size_t d = x.over_component();
    const std::size_t a = detail::arc_containing(L, unders[d], x.over_position());
    lon = series_pow(arcs[d][a].expansion, x.gamma) * lon;
  }
  return lon;
}

// Integer residue; modulus 0 means exact equality in Z.
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 0;

  static Residue make(std::int64_t value, std::int64_t modulus) {
    if (modulus < 0) modulus = -modulus;
    if (modulus > 0) value = ((value % modulus) + modulus) % modulus;
    return {value, modulus};
  }
  bool contains(std::int64_t v) const { return make(v, modulus).value == value; }

  friend bool operator==(const Residue&, const Residue&) = default;
};

inline std::string to_string(const Residue& r) {
  return std::to_string(r.value) + " (mod " + std::to_string(r.modulus) + ")";
}

// Global sign relating the x_i x_j coefficient of the k-th longitude to
// mu-bar(ijk). Fixed by the cyclic-height links L(D), whose triple linking
// number is minus the doodle mu-invariant of D.
inline constexpr int kMeridianConvention = -1;

// mu-bar(ijk) as the x_i x_j coefficient of the longitude of k, modulo the
// gcd of the linking numbers.
inline Residue mu_bar_oracle(const LinkDiagram& L, const std::array<std::size_t, 3>& order = {0, 1, 2},
                             const BaseArcs& base = {0, 0, 0}) {
  const auto lon = longitude_expansion(L, order[2], base);
  return Residue::make(kMeridianConvention * lon.quad[order[0]][order[1]], delta(L));
}

// ---- signed words ----------------------------------------------------------

struct Letter {
  std::size_t symbol = 0;
  int exponent = 1;
};

using SignedWord = std::vector<Letter>;

// e_rs(w): sum over index pairs i < j with letter i = r and letter j = s of
// the product of their exponents. Single pass.
inline std::int64_t signed_occurrence(const SignedWord& w, std::size_t r, std::size_t s) {
  std::int64_t seen_r = 0, total = 0;
  for (const auto& l : w) {
    if (l.symbol == s) total += seen_r * l.exponent;
    if (l.symbol == r) seen_r += l.exponent;
  }
  return total;
}

inline std::int64_t exponent_sum(const SignedWord& w, std::size_t symbol) {
  std::int64_t n = 0;
  for (const auto& l : w)
    if (l.symbol == symbol) n += l.exponent;
  return n;
}

// m = e_{12}(w0) + e_{20}(w1) + e_{01}(w2), components numbered from 0.
// Word w_k may only use the two symbols other than k.
inline std::int64_t m_from_words(const SignedWord& w0, const SignedWord& w1, const SignedWord& w2) {
  const std::array<const SignedWord*, 3> words{&w0, &w1, &w2};
  for (std::size_t k = 0; k < 3; ++k) {
    for (const auto& l : *words[k]) {
      if (l.symbol == k || l.symbol > 2) {
        throw std::invalid_argument("word " + std::to_string(k) + " uses forbidden symbol " + std::to_string(l.symbol));
      }
    }
  }
  return signed_occurrence(w0, 1, 2) + signed_occurrence(w1, 2, 0) + signed_occurrence(w2, 0, 1);
}

}  // namespace trilink
