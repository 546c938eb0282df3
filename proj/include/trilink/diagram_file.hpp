#pragma once

// JSON diagram files.
//
//   {
//     "version": 1,
//     "components": [ [["x", "y"], ...], [...], [...] ],
//     "crossings": [ {"key": [comp_a, seg_a, comp_b, seg_b], "over": "a"}, ... ]
//   }
//
// Coordinates are rational strings ("p/q" or an integer). Component and
// segment indices are 0-based. "crossings" is omitted for doodle files; when
// present its keys must match the detected crossings exactly. Unknown fields
// are rejected.

#include <trilink/link_diagram.hpp>

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilink {

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiagramFile {
  static constexpr int kVersion = 1;
  std::vector<Polyline> components;
  std::optional<std::map<CrossingKey, Branch>> crossings;

  bool is_link() const { return crossings.has_value(); }
};

namespace detail {

inline Rational parse_rational(const std::string& s, const std::string& where) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  const std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  bool ok = i > num_start;
  if (ok && i < s.size() && s[i] == '/') {
    const std::size_t den_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    ok = i > den_start;
  }
  ok = ok && i == s.size();
  if (!ok) throw FileError(where + ": not a rational \"" + s + "\"");
  Rational q(s, 10);
  if (q.get_den() == 0) throw FileError(where + ": zero denominator");
  q.canonicalize();
  return q;
}

inline void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) known = known || it.key() == a;
    if (!known) throw FileError(where + ": unknown field \"" + it.key() + "\"");
  }
}

inline std::size_t index_at(const nlohmann::json& key, std::size_t i, const std::string& where) {
  if (!key[i].is_number_unsigned()) throw FileError(where + ": key entries must be non-negative integers");
  return key[i].get<std::size_t>();
}

}  // namespace detail

inline DiagramFile parse_diagram(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FileError(std::string("json: ") + e.what());
  }
  if (!doc.is_object()) throw FileError("top level must be an object");
  detail::reject_unknown(doc, {"version", "components", "crossings"}, "top level");
  if (!doc.contains("version") || doc["version"] != DiagramFile::kVersion) {
    throw FileError("version: expected " + std::to_string(DiagramFile::kVersion));
  }
  if (!doc.contains("components") || !doc["components"].is_array()) throw FileError("components: missing array");

  DiagramFile out;
  const auto& comps = doc["components"];
  if (comps.size() != kComponents) throw FileError("components: expected 3 curves, got " + std::to_string(comps.size()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::string where_c = "components[" + std::to_string(c) + "]";
    if (!comps[c].is_array()) throw FileError(where_c + ": must be an array of points");
    std::vector<Point2> pts;
    for (std::size_t v = 0; v < comps[c].size(); ++v) {
      const std::string where = where_c + "[" + std::to_string(v) + "]";
      const auto& p = comps[c][v];
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw FileError(where + ": point must be [\"x\", \"y\"] with rational strings");
      }
      pts.emplace_back(detail::parse_rational(p[0].get<std::string>(), where + ".x"),
                       detail::parse_rational(p[1].get<std::string>(), where + ".y"));
    }
    try {
      out.components.emplace_back(std::move(pts));
    } catch (const GeometryError& e) {
      throw FileError(where_c + ": " + e.what());
    }
  }

  if (doc.contains("crossings")) {
    const auto& xs = doc["crossings"];
    if (!xs.is_array()) throw FileError("crossings: must be an array");
    std::map<CrossingKey, Branch> bits;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const std::string where = "crossings[" + std::to_string(i) + "]";
      const auto& x = xs[i];
      if (!x.is_object()) throw FileError(where + ": must be an object");
      detail::reject_unknown(x, {"key", "over"}, where);
      if (!x.contains("key") || !x["key"].is_array() || x["key"].size() != 4) {
        throw FileError(where + ".key: expected [comp_a, seg_a, comp_b, seg_b]");
      }
      const auto& key = x["key"];
      CrossingKey k{detail::index_at(key, 0, where), detail::index_at(key, 1, where), detail::index_at(key, 2, where),
                    detail::index_at(key, 3, where)};
      if (!x.contains("over") || !x["over"].is_string() || (x["over"] != "a" && x["over"] != "b")) {
        throw FileError(where + ".over: expected \"a\" or \"b\"");
      }
      if (!bits.emplace(k, x["over"] == "a" ? Branch::A : Branch::B).second) {
        throw FileError(where + ": duplicate key " + to_string(k));
      }
    }
    out.crossings = std::move(bits);
  }
  return out;
}

inline DiagramFile load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

inline Doodle to_doodle(const DiagramFile& f) {
  try {
    return Doodle(f.components);
  } catch (const GeometryError& e) {
    throw FileError(e.what());
  }
}

inline LinkDiagram to_link(const DiagramFile& f) {
  if (!f.crossings) throw FileError("crossings: a link diagram file needs over/under bits");
  try {
    return LinkDiagram(f.components, *f.crossings);
  } catch (const GeometryError& e) {
    throw FileError(e.what());
  } catch (const LinkDiagramError& e) {
    throw FileError(std::string("crossings: ") + e.what());
  }
}

// Canonical text: reduced rationals, crossings sorted by key, one point or
// crossing per line.
inline std::string serialize(const std::vector<Polyline>& components,
                             const std::optional<std::map<CrossingKey, Branch>>& crossings) {
  std::ostringstream os;
  os << "{\n  \"version\": " << DiagramFile::kVersion << ",\n  \"components\": [\n";
  for (std::size_t c = 0; c < components.size(); ++c) {
    os << "    [\n";
    const auto& vs = components[c].vertices();
    for (std::size_t v = 0; v < vs.size(); ++v) {
      os << "      " << nlohmann::json::array({vs[v].x.get_str(), vs[v].y.get_str()}).dump()
         << (v + 1 < vs.size() ? ",\n" : "\n");
    }
    os << "    ]" << (c + 1 < components.size() ? ",\n" : "\n");
  }
  os << "  ]";
  if (crossings) {
    os << ",\n  \"crossings\": [";
    std::size_t i = 0;
    for (const auto& [k, b] : *crossings) {
      os << (i++ ? ",\n" : "\n") << "    {\"key\": [" << k.comp_a << ", " << k.seg_a << ", " << k.comp_b << ", "
         << k.seg_b << "], \"over\": \"" << (b == Branch::A ? "a" : "b") << "\"}";
    }
    os << (crossings->empty() ? "]" : "\n  ]");
  }
  os << "\n}\n";
  return os.str();
}

inline std::string serialize(const Doodle& d) { return serialize(d.components(), std::nullopt); }
inline std::string serialize(const LinkDiagram& L) { return serialize(L.components(), L.over_bits()); }
inline std::string serialize(const DiagramFile& f) { return serialize(f.components, f.crossings); }

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path);
  out << text;
}

}  // namespace trilink
