#pragma once

// Both sides of the triple-linking congruence
//
//   mu-bar(123) == -mu(C1, C2, C3) - sum_k <pairing of G_{L_k}>  (mod Delta)
//
// and of the cyclic-height identity mu-bar(L(D)) = -mu(D).

#include <trilink/chord.hpp>
#include <trilink/magnus.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace trilink {

using GapChoices = std::array<std::optional<std::size_t>, 3>;

struct RhsParts {
  std::int64_t mu = 0;
  // Pairing of G_{L_k}, indexed by k. Entry 0 is the term with T_{1,3} and
  // T_{1,2} in 1-based notation.
  std::array<std::int64_t, 3> pairings{};
  std::int64_t rhs = 0;
};

inline RhsParts rhs_theorem(const LinkDiagram& L, const GapChoices& gaps = {}) {
  RhsParts parts;
  parts.mu = mu_invariant(project_to_doodle(L), kIdentity3);
  parts.rhs = -parts.mu;
  for (std::size_t k = 0; k < kComponents; ++k) {
    parts.pairings[k] = pairing_combinatorial(build_chord_diagram(L, k, gaps[k]));
    parts.rhs -= parts.pairings[k];
  }
  return parts;
}

struct CongruenceReport {
  std::array<std::int64_t, 3> lk{};  // lk(1,2), lk(2,3), lk(3,1)
  std::int64_t delta = 0;
  std::int64_t mu = 0;
  std::array<std::int64_t, 3> pairings{};
  std::int64_t rhs = 0;
  Residue lhs;  // mu-bar(123) from the Magnus expansion
  bool pass = false;
  GapChoices gaps{};
  std::optional<std::uint64_t> seed;

  std::string verdict() const { return pass ? "pass" : "fail"; }
};

inline CongruenceReport check_congruence(const LinkDiagram& L, const GapChoices& gaps = {}) {
  CongruenceReport r;
  r.lk = linking_numbers(L);
  r.delta = delta_of(r.lk[0], r.lk[1], r.lk[2]);
  const RhsParts parts = rhs_theorem(L, gaps);
  r.mu = parts.mu;
  r.pairings = parts.pairings;
  r.rhs = parts.rhs;
  r.lhs = mu_bar_oracle(L);
  r.pass = r.lhs.contains(r.rhs);
  r.gaps = gaps;
  return r;
}

struct LdReport {
  std::int64_t mu = 0;
  std::int64_t delta = 0;
  std::int64_t mu_bar = 0;
  std::array<std::int64_t, 3> pairings{};
  bool pass = false;
};

inline LdReport verify_ld_theorem(const Doodle& d) {
  const LinkDiagram L = construct_L_of_D(d);
  LdReport r;
  r.mu = mu_invariant(d);
  r.delta = delta(L);
  const Residue bar = mu_bar_oracle(L);
  r.mu_bar = bar.value;
  for (std::size_t k = 0; k < kComponents; ++k) r.pairings[k] = pairing_combinatorial(build_chord_diagram(L, k));
  r.pass = r.delta == 0 && bar.modulus == 0 && r.mu_bar == -r.mu;
  return r;
}

}  // namespace trilink
