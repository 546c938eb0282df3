// trilink: doodle mu-invariant, chord-diagram pairings and Milnor's triple
// linking number for 3-component link diagrams.
//
// Exit codes: 0 success / congruence holds, 1 congruence failure,
// 2 parse or validation error.

#include <trilink/diagram_file.hpp>
#include <trilink/harness.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace trilink;
using nlohmann::json;

namespace {

enum class Format { Text, Machine };

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

json gaps_json(const GapChoices& g) {
  json out = json::array();
  for (const auto& x : g) out.push_back(x ? json(*x) : json(nullptr));
  return out;
}

json report_json(const CongruenceReport& r) {
  json j;
  j["lk"] = {{"12", r.lk[0]}, {"23", r.lk[1]}, {"31", r.lk[2]}};
  j["delta"] = r.delta;
  j["mu"] = r.mu;
  j["pairings"] = {{"G_L1", r.pairings[0]}, {"G_L2", r.pairings[1]}, {"G_L3", r.pairings[2]}};
  j["rhs"] = r.rhs;
  j["mu_bar"] = {{"value", r.lhs.value}, {"modulus", r.lhs.modulus}};
  j["verdict"] = r.verdict();
  j["gaps"] = gaps_json(r.gaps);
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

void print_report_text(std::ostream& os, const CongruenceReport& r) {
  os << "lk(1,2) = " << r.lk[0] << "  lk(2,3) = " << r.lk[1] << "  lk(3,1) = " << r.lk[2] << "\n"
     << "Delta = " << r.delta << "\n"
     << "mu(C1,C2,C3) = " << r.mu << "\n"
     << "<3x2, G_L1> = " << r.pairings[0] << "  <1x3, G_L2> = " << r.pairings[1] << "  <2x1, G_L3> = " << r.pairings[2]
     << "\n"
     << "rhs = -mu - sum = " << r.rhs << "\n"
     << "mu-bar(123) = " << to_string(r.lhs) << "\n"
     << "verdict: " << r.verdict() << (r.pass ? "" : "  (rhs not congruent to mu-bar)") << "\n";
}

GapChoices gaps_from(const std::array<long, 3>& raw) {
  GapChoices g{};
  for (std::size_t k = 0; k < 3; ++k)
    if (raw[k] >= 0) g[k] = static_cast<std::size_t>(raw[k]);
  return g;
}

int cmd_check(const std::string& path, const std::array<long, 3>& gap, std::optional<std::uint64_t> seed, Format fmt) {
  const LinkDiagram L = to_link(load_diagram(path));
  CongruenceReport r = check_congruence(L, gaps_from(gap));
  r.seed = seed;
  if (fmt == Format::Machine) std::cout << report_json(r).dump(2) << "\n";
  else print_report_text(std::cout, r);
  return r.pass ? 0 : kExitFail;
}

Doodle doodle_from_file(const std::string& path) {
  const DiagramFile f = load_diagram(path);
  return f.is_link() ? to_link(f).doodle() : to_doodle(f);
}

int cmd_mu(const std::string& path, Format fmt) {
  const Doodle d = doodle_from_file(path);
  json j = json::array();
  for (const auto& p : all_permutations3()) {
    const auto v = mu_invariant(d, p);
    const std::string label = std::to_string(p[0] + 1) + std::to_string(p[1] + 1) + std::to_string(p[2] + 1);
    if (fmt == Format::Text) {
      std::cout << "mu(C" << p[0] + 1 << ",C" << p[1] + 1 << ",C" << p[2] + 1 << ") = " << v
                << "   sgn = " << permutation_sign(p) << "\n";
    }
    j.push_back({{"permutation", label}, {"sign", permutation_sign(p)}, {"mu", v}});
  }
  if (fmt == Format::Machine) std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_chords(const std::string& path, long k1, long gap, const std::string& export_path, Format fmt) {
  if (k1 < 1 || k1 > 3) throw CLI::ValidationError("--k", "component must be 1, 2 or 3");
  const LinkDiagram L = to_link(load_diagram(path));
  const auto k = static_cast<std::size_t>(k1 - 1);
  const auto g = build_chord_diagram(L, k, gap >= 0 ? std::optional<std::size_t>(gap) : std::nullopt);
  const auto pairing = pairing_combinatorial(g);
  const auto real = realize_geometric(g);

  json skel = json::array();
  for (const auto& p : g.skeleton()) {
    if (p.kind == SkeletonPoint::Kind::BaseNc) skel.push_back("b_nc" + std::to_string(g.nc_component() + 1));
    else if (p.kind == SkeletonPoint::Kind::BaseC) skel.push_back("b_c" + std::to_string(g.c_component() + 1));
    else skel.push_back(std::to_string(p.under_component + 1) + (p.gamma > 0 ? "+" : "-"));
  }
  json sets = {{"T_nc", json::array()}, {"T_c", json::array()}};
  for (const auto& c : g.chords()) {
    sets[c.set == ChordSet::TowardNc ? "T_nc" : "T_c"].push_back(skel[c.crossing_end]);
  }

  if (fmt == Format::Machine) {
    std::cout << json{{"component", k1}, {"skeleton", skel}, {"sets", sets}, {"pairing", pairing}}.dump(2) << "\n";
  } else {
    std::cout << "G_L" << k1 << " skeleton:";
    for (const auto& s : skel) std::cout << " " << s.get<std::string>();
    std::cout << "\nT_" << k1 << "," << g.nc_component() + 1 << " (to b_nc" << g.nc_component() + 1
              << "): " << sets["T_nc"].size() << " chords\n"
              << "T_" << k1 << "," << g.c_component() + 1 << " (to b_c" << g.c_component() + 1
              << "): " << sets["T_c"].size() << " chords\n"
              << "pairing = " << pairing << "\n";
  }
  if (!export_path.empty()) {
    json out;
    for (const auto& p : real.skeleton) out["skeleton"].push_back({p.x.get_d(), p.y.get_d()});
    out["chords"] = json::array();
    for (const auto& c : real.chords) {
      out["chords"].push_back({{"set", to_string(c.set)},
                               {"from", {c.from.x.get_d(), c.from.y.get_d()}},
                               {"to", {c.to.x.get_d(), c.to.y.get_d()}}});
    }
    save_text(export_path, out.dump(2) + "\n");
  }
  return 0;
}

int cmd_milnor(const std::string& path, Format fmt) {
  const LinkDiagram L = to_link(load_diagram(path));
  const auto lk = linking_numbers(L);
  const auto mu_bar = mu_bar_oracle(L);
  // Degree-1 longitude coefficients, printed next to the crossing half-sums.
  json magnus_lk;
  magnus_lk["12"] = longitude_expansion(L, 1).lin[0];
  magnus_lk["23"] = longitude_expansion(L, 2).lin[1];
  magnus_lk["31"] = longitude_expansion(L, 0).lin[2];
  if (fmt == Format::Machine) {
    std::cout << json{{"lk", {{"12", lk[0]}, {"23", lk[1]}, {"31", lk[2]}}},
                      {"lk_magnus", magnus_lk},
                      {"delta", delta(L)},
                      {"mu_bar", {{"value", mu_bar.value}, {"modulus", mu_bar.modulus}}}}
                         .dump(2)
              << "\n";
  } else {
    std::cout << "lk(1,2) = " << lk[0] << " (magnus " << magnus_lk["12"] << ")\n"
              << "lk(2,3) = " << lk[1] << " (magnus " << magnus_lk["23"] << ")\n"
              << "lk(3,1) = " << lk[2] << " (magnus " << magnus_lk["31"] << ")\n"
              << "Delta = " << delta(L) << "\n"
              << "mu-bar(123) = " << to_string(mu_bar) << "\n";
  }
  return 0;
}

int cmd_ld(const std::string& in, const std::string& out) {
  const Doodle d = doodle_from_file(in);
  save_text(out, serialize(construct_L_of_D(d)));
  return 0;
}

int cmd_gen(const std::string& kind, std::uint64_t seed, const std::string& out) {
  GenParams p;
  p.seed = seed;
  std::string text;
  if (kind == "doodle") text = serialize(random_doodle(p));
  else if (kind == "link") text = serialize(random_link(p, LinkingMode::Free));
  else if (kind == "unlinked") text = serialize(random_link(p, LinkingMode::Unlinked));
  else if (kind == "even") text = serialize(random_link(p, LinkingMode::Even));
  else if (kind == "venn") text = serialize(venn_doodle());
  else if (kind == "borromean") text = serialize(construct_L_of_D(venn_doodle()));
  else if (kind == "disjoint") text = serialize(disjoint_doodle());
  else if (kind == "unlink") text = serialize(construct_L_of_D(disjoint_doodle()));
  else if (kind == "forbidden-before") text = serialize(forbidden_move_fixture().first);
  else if (kind == "forbidden-after") text = serialize(forbidden_move_fixture().second);
  else throw CLI::ValidationError("kind", "unknown kind " + kind);
  save_text(out, text);
  return 0;
}

int cmd_harness(std::size_t count, std::uint64_t seed, Format fmt) {
  const HarnessSummary s = run_harness(count, seed);
  if (fmt == Format::Machine) {
    json j;
    j["count"] = count;
    j["seed"] = seed;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["delta_zero"] = s.delta_zero;
    j["gap_stable"] = s.gap_stable;
    j["pairings_varied_with_gap"] = s.pairings_varied;
    j["failures"] = json::array();
    for (const auto& e : s.entries)
      if (!e.report.pass) j["failures"].push_back(report_json(e.report));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& e : s.entries) {
      if (e.report.pass) continue;
      std::cout << "--- failure: diagram " << e.index << " seed " << e.seed << " mode " << to_string(e.mode) << "\n";
      print_report_text(std::cout, e.report);
    }
    std::cout << "diagrams: " << count << "  passed: " << s.passed << "  failed: " << s.failed
              << "  (Delta = 0: " << s.delta_zero << ")\n"
              << "gap invariance of rhs mod Delta: " << s.gap_stable << "/" << count << " stable; individual pairings moved with the gap on "
              << s.pairings_varied << " diagrams\n";
  }
  return s.all_pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trilink: doodle invariants and Milnor's triple linking number"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "machine"}));

  std::string path, out_path, export_path, kind;
  std::array<long, 3> gap{-1, -1, -1};
  long k = 1, single_gap = -1;
  std::uint64_t seed = 1;
  std::size_t count = 200;

  auto* check = app.add_subcommand("check", "Verify the triple linking congruence for a link diagram");
  check->add_option("path", path, "Link diagram file")->required();
  check->add_option("--gap-k1", gap[0], "Base gap for G_L1");
  check->add_option("--gap-k2", gap[1], "Base gap for G_L2");
  check->add_option("--gap-k3", gap[2], "Base gap for G_L3");
  auto* check_seed = check->add_option("--seed", seed, "Seed recorded in the report");

  auto* mu = app.add_subcommand("mu", "Doodle mu-invariant for all six orderings");
  mu->add_option("path", path, "Doodle or link file")->required();

  auto* chords = app.add_subcommand("chords", "List the generalized chord diagram G_Lk");
  chords->add_option("path", path, "Link diagram file")->required();
  chords->add_option("--k", k, "Component (1, 2 or 3)");
  chords->add_option("--gap", single_gap, "Base gap index");
  chords->add_option("--export", export_path, "Write realization coordinates (JSON)");

  auto* milnor = app.add_subcommand("milnor", "Linking numbers, Delta and mu-bar(123)");
  milnor->add_option("path", path, "Link diagram file")->required();

  auto* ld = app.add_subcommand("ld", "Write the cyclic-height link L(D) of a doodle");
  ld->add_option("path", path, "Doodle file")->required();
  ld->add_option("out", out_path, "Output link file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a diagram file");
  gen->add_option("kind", kind,
                  "doodle | link | unlinked | even | venn | borromean | disjoint | unlink | forbidden-before | forbidden-after")
      ->required();
  gen->add_option("out", out_path, "Output file")->required();
  gen->add_option("--seed", seed, "Generator seed");

  auto* harness = app.add_subcommand("harness", "Check the congruence on a seeded random corpus");
  harness->add_option("--count", count, "Number of diagrams");
  harness->add_option("--seed", seed, "Corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  const Format fmt = format_name == "machine" ? Format::Machine : Format::Text;

  try {
    if (*check) {
      return cmd_check(path, gap, *check_seed ? std::optional<std::uint64_t>(seed) : std::nullopt, fmt);
    }
    if (*mu) return cmd_mu(path, fmt);
    if (*chords) return cmd_chords(path, k, single_gap, export_path, fmt);
    if (*milnor) return cmd_milnor(path, fmt);
    if (*ld) return cmd_ld(path, out_path);
    if (*gen) return cmd_gen(kind, seed, out_path);
    if (*harness) return cmd_harness(count, seed, fmt);
  } catch (const FileError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
