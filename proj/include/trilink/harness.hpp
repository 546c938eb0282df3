#pragma once

// Seeded corpus of random link diagrams and the batch congruence check,
// shared by the command-line harness and the acceptance suite.

#include <trilink/instances.hpp>
#include <trilink/theorem.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace trilink {

inline LinkingMode corpus_mode(std::size_t i) {
  switch (i % 3) {
    case 0: return LinkingMode::Free;
    case 1: return LinkingMode::Unlinked;
    default: return LinkingMode::Even;
  }
}

inline const char* to_string(LinkingMode m) {
  switch (m) {
    case LinkingMode::Free: return "free";
    case LinkingMode::Unlinked: return "unlinked";
    case LinkingMode::Even: return "even";
  }
  return "?";
}

inline std::uint64_t corpus_seed(std::uint64_t base, std::size_t i) { return base * 1'000'003ULL + i; }

inline LinkDiagram corpus_link(std::uint64_t base, std::size_t i) {
  GenParams p;
  p.seed = corpus_seed(base, i);
  return random_link(p, corpus_mode(i));
}

// Up to `wanted` distinct gap indices spread over 0 .. n-1.
inline std::vector<std::size_t> spread_choices(std::size_t n, std::size_t wanted) {
  std::vector<std::size_t> out;
  if (n == 0) return out;
  for (std::size_t i = 0; i < wanted; ++i) out.push_back(i * n / wanted);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct GapStability {
  bool rhs_stable = true;          // RHS residue identical across every gap tried
  bool pairings_varied = false;    // some individual pairing changed with the gap
  std::size_t choices_tried = 0;
};

// Re-bases one component at a time over up to `per_component` gaps.
inline GapStability measure_gap_stability(const LinkDiagram& L, std::size_t per_component = 5) {
  GapStability g;
  const std::int64_t modulus = delta(L);
  const RhsParts reference = rhs_theorem(L);
  const Residue ref = Residue::make(reference.rhs, modulus);
  for (std::size_t k = 0; k < kComponents; ++k) {
    for (std::size_t gap : spread_choices(gap_count(L, k), per_component)) {
      GapChoices gaps{};
      gaps[k] = gap;
      const RhsParts parts = rhs_theorem(L, gaps);
      ++g.choices_tried;
      if (Residue::make(parts.rhs, modulus) != ref) g.rhs_stable = false;
      if (parts.pairings[k] != reference.pairings[k]) g.pairings_varied = true;
    }
  }
  return g;
}

// Base-arc tuples for re-basing: up to `count` distinct arcs per component,
// staggered so the components do not move in step.
inline std::vector<BaseArcs> base_arc_choices(const LinkDiagram& L, std::size_t count = 5) {
  std::array<std::vector<std::size_t>, 3> per;
  for (std::size_t c = 0; c < kComponents; ++c) {
    per[c] = spread_choices(std::max<std::size_t>(detail::under_passes(L, c).size(), 1), count);
  }
  std::vector<BaseArcs> out;
  for (std::size_t i = 0; i < count; ++i) {
    BaseArcs b{};
    for (std::size_t c = 0; c < kComponents; ++c) b[c] = per[c][(i + c) % per[c].size()];
    out.push_back(b);
  }
  return out;
}

// Number of distinct mu-bar residues over the base-arc choices.
inline std::size_t rebase_variants(const LinkDiagram& L, std::size_t count = 5) {
  std::set<std::int64_t> seen;
  for (const auto& base : base_arc_choices(L, count)) seen.insert(mu_bar_oracle(L, {0, 1, 2}, base).value);
  return seen.size();
}

// True when every component offers at least n distinct gaps and n distinct
// base arcs.
inline bool supports_rebasing(const LinkDiagram& L, std::size_t n) {
  for (std::size_t k = 0; k < kComponents; ++k) {
    if (gap_count(L, k) < n || detail::under_passes(L, k).size() < n) return false;
  }
  return true;
}

// Corpus with a larger vertex budget, for re-basing checks that need many
// crossings per component.
inline LinkDiagram dense_corpus_link(std::uint64_t base, std::size_t i) {
  GenParams p;
  p.seed = corpus_seed(base, i);
  p.min_vertices = 9;
  p.max_vertices = 14;
  return random_link(p, corpus_mode(i));
}

struct HarnessEntry {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  LinkingMode mode = LinkingMode::Free;
  CongruenceReport report;
  GapStability gaps;
};

struct HarnessSummary {
  std::vector<HarnessEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t delta_zero = 0;
  std::size_t gap_stable = 0;
  std::size_t pairings_varied = 0;

  bool all_pass() const { return failed == 0; }
};

inline HarnessSummary run_harness(std::size_t count, std::uint64_t base_seed, bool measure_gaps = true) {
  HarnessSummary s;
  for (std::size_t i = 0; i < count; ++i) {
    HarnessEntry e;
    e.index = i;
    e.seed = corpus_seed(base_seed, i);
    e.mode = corpus_mode(i);
    const LinkDiagram L = corpus_link(base_seed, i);
    e.report = check_congruence(L);
    e.report.seed = e.seed;
    if (measure_gaps) e.gaps = measure_gap_stability(L);
    (e.report.pass ? s.passed : s.failed) += 1;
    if (e.report.delta == 0) ++s.delta_zero;
    if (e.gaps.rhs_stable) ++s.gap_stable;
    if (e.gaps.pairings_varied) ++s.pairings_varied;
    s.entries.push_back(std::move(e));
  }
  return s;
}

}  // namespace trilink
