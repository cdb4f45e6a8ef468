#pragma once

// File formats.
//
// JSON polytope (authoritative):
//   {
//   "format": "sewkit-polytope",
//   "version": 1,
//   "dim": <int>,
//   "labels": [<string>, ...],
//   "facets": [
//   [<label>, ...],
//   ...
//   ],
//   "metadata": {"generator": <string>, "history": [{"tower": [[x, y], ...], "new_label": <string>, "auto": <bool>}, ...]}
//   }
//
// Plain text polytope (one record per line, '#' starts a comment):
//   sewkit-polytope 1
//   dim <int>
//   labels <label> ...
//   generator <free text>                       (optional)
//   sewn <new-label> auto|manual <x1> <y1> ...   (optional, repeatable)
//   facet <label> ...                            (one per facet)
//
// Labels never contain whitespace, '"' or '#'.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sewkit/polytope.hpp"
#include "sewkit/tower.hpp"
#include "sewkit/tracking.hpp"

namespace sewkit {

using LabelPair = std::pair<std::string, std::string>;

struct SewRecord {
  std::vector<LabelPair> tower;
  std::string new_label;
  bool automatic = false;

  friend bool operator==(const SewRecord&, const SewRecord&) = default;
};

struct Provenance {
  std::string generator;
  std::vector<SewRecord> history;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct PolytopeFile {
  SimplicialPolytope polytope;
  Provenance provenance;

  friend bool operator==(const PolytopeFile&, const PolytopeFile&) = default;
};

enum class FileFormat { Json, Text };

inline constexpr int kFormatVersion = 1;

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json label_array(const SimplicialPolytope& p, VertexSet s) {
  ordered_json a = ordered_json::array();
  for (VertexId v : s) a.push_back(p.label(v));
  return a;
}

inline VertexSet resolve_labels(const std::vector<std::string>& names, const std::vector<std::string>& labels) {
  VertexSet s;
  for (const auto& name : names) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw Error(ErrorCode::Parse, "unknown label '" + name + "'");
    const auto v = static_cast<VertexId>(it - labels.begin());
    if (s.contains(v)) throw Error(ErrorCode::Parse, "label '" + name + "' repeated within a facet");
    s.insert(v);
  }
  return s;
}

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline void check_header(const std::string& format, int version, std::string_view expected) {
  if (format != expected) throw Error(ErrorCode::Parse, "expected format '" + std::string(expected) + "'");
  if (version != kFormatVersion) {
    throw Error(ErrorCode::Parse, "unsupported format version " + std::to_string(version));
  }
}

}  // namespace detail

inline std::string to_json(const PolytopeFile& file) {
  using detail::ordered_json;
  const SimplicialPolytope& p = file.polytope;
  ordered_json meta = ordered_json::object();
  meta["generator"] = file.provenance.generator;
  ordered_json history = ordered_json::array();
  for (const SewRecord& r : file.provenance.history) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : r.tower) pairs.push_back(ordered_json::array({x, y}));
    ordered_json rec = ordered_json::object();
    rec["tower"] = std::move(pairs);
    rec["new_label"] = r.new_label;
    rec["auto"] = r.automatic;
    history.push_back(std::move(rec));
  }
  meta["history"] = std::move(history);

  std::ostringstream os;
  os << "{\n";
  os << "\"format\": \"sewkit-polytope\",\n";
  os << "\"version\": " << kFormatVersion << ",\n";
  os << "\"dim\": " << p.dim() << ",\n";
  os << "\"labels\": " << ordered_json(p.labels()).dump() << ",\n";
  os << "\"facets\": [\n";
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    os << detail::label_array(p, p.facets()[i]).dump() << (i + 1 < p.num_facets() ? ",\n" : "\n");
  }
  os << "],\n";
  os << "\"metadata\": " << meta.dump() << "\n";
  os << "}\n";
  return os.str();
}

inline PolytopeFile parse_json(std::string_view text) {
  using detail::ordered_json;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
    detail::check_header(doc.at("format").get<std::string>(), doc.at("version").get<int>(), "sewkit-polytope");
    const int dim = doc.at("dim").get<int>();
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    std::vector<VertexSet> facets;
    for (const auto& f : doc.at("facets")) facets.push_back(detail::resolve_labels(f.get<std::vector<std::string>>(), labels));
    Provenance prov;
    if (doc.contains("metadata")) {
      const auto& meta = doc.at("metadata");
      prov.generator = meta.value("generator", std::string{});
      if (meta.contains("history")) {
        for (const auto& rec : meta.at("history")) {
          SewRecord r;
          for (const auto& pr : rec.at("tower")) r.tower.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
          r.new_label = rec.at("new_label").get<std::string>();
          r.automatic = rec.value("auto", false);
          prov.history.push_back(std::move(r));
        }
      }
    }
    return {make_polytope(dim, std::move(labels), std::move(facets)), std::move(prov)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline std::string to_text(const PolytopeFile& file) {
  const SimplicialPolytope& p = file.polytope;
  std::ostringstream os;
  os << "sewkit-polytope " << kFormatVersion << "\n";
  os << "dim " << p.dim() << "\n";
  os << "labels";
  for (const auto& l : p.labels()) os << ' ' << l;
  os << "\n";
  if (!file.provenance.generator.empty()) os << "generator " << file.provenance.generator << "\n";
  for (const SewRecord& r : file.provenance.history) {
    os << "sewn " << r.new_label << (r.automatic ? " auto" : " manual");
    for (const auto& [x, y] : r.tower) os << ' ' << x << ' ' << y;
    os << "\n";
  }
  for (VertexSet f : p.facets()) {
    os << "facet";
    for (VertexId v : f) os << ' ' << p.label(v);
    os << "\n";
  }
  return os.str();
}

inline PolytopeFile parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  int dim = 0;
  std::vector<std::string> labels;
  bool have_labels = false;
  std::vector<std::vector<std::string>> facet_names;
  Provenance prov;
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + why); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    const std::string key = tok.front();
    tok.erase(tok.begin());
    if (!header) {
      if (key != "sewkit-polytope" || tok.size() != 1) fail("missing 'sewkit-polytope <version>' header");
      if (tok[0] != std::to_string(kFormatVersion)) fail("unsupported format version " + tok[0]);
      header = true;
    } else if (key == "dim") {
      if (tok.size() != 1) fail("dim takes one integer");
      try {
        dim = std::stoi(tok[0]);
      } catch (const std::exception&) {
        fail("bad dimension '" + tok[0] + "'");
      }
    } else if (key == "labels") {
      labels = tok;
      have_labels = true;
    } else if (key == "generator") {
      const auto pos = line.find("generator") + std::string("generator").size();
      std::string rest = line.substr(pos);
      rest.erase(0, rest.find_first_not_of(" \t"));
      rest.erase(rest.find_last_not_of(" \t\r") + 1);
      prov.generator = rest;
    } else if (key == "sewn") {
      if (tok.size() < 2 || tok.size() % 2 != 0 || (tok[1] != "auto" && tok[1] != "manual")) {
        fail("sewn record must be: sewn <label> auto|manual <x> <y> ...");
      }
      SewRecord r{{}, tok[0], tok[1] == "auto"};
      for (std::size_t i = 2; i + 1 < tok.size(); i += 2) r.tower.emplace_back(tok[i], tok[i + 1]);
      prov.history.push_back(std::move(r));
    } else if (key == "facet") {
      facet_names.push_back(tok);
    } else {
      fail("unknown record '" + key + "'");
    }
  }
  if (!header) throw Error(ErrorCode::Parse, "empty polytope file");
  if (!have_labels) throw Error(ErrorCode::Parse, "missing labels record");
  std::vector<VertexSet> facets;
  for (const auto& names : facet_names) facets.push_back(detail::resolve_labels(names, labels));
  return {make_polytope(dim, std::move(labels), std::move(facets)), std::move(prov)};
}

/// Format is detected from the first non-blank character.
inline PolytopeFile parse_polytope(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_json(text);
  return parse_text(text);
}

inline std::string emit_polytope(const PolytopeFile& file, FileFormat format) {
  return format == FileFormat::Json ? to_json(file) : to_text(file);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IO, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IO, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::IO, "write to '" + path + "' failed");
}

inline PolytopeFile load_polytope(const std::string& path) { return parse_polytope(read_file(path)); }

/// Paths ending in .txt get the text format, everything else JSON.
inline FileFormat format_for_path(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".txt") == 0 ? FileFormat::Text : FileFormat::Json;
}

inline void save_polytope(const std::string& path, const PolytopeFile& file) {
  write_file(path, emit_polytope(file, format_for_path(path)));
}

// --- towers -------------------------------------------------------------

/// Tower given as "x1,y1:x2,y2:..." in labels.
inline std::vector<LabelPair> parse_tower_spec(std::string_view spec) {
  std::vector<LabelPair> out;
  std::string s(spec);
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(':', start), s.size());
    const std::string item = s.substr(start, end - start);
    const auto comma = item.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == item.size() ||
        item.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorCode::Parse, "tower pair '" + item + "' must look like x,y");
    }
    out.emplace_back(item.substr(0, comma), item.substr(comma + 1));
    start = end + 1;
  }
  return out;
}

inline std::string tower_spec(const std::vector<LabelPair>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ':';
    out += pairs[i].first + ',' + pairs[i].second;
  }
  return out;
}

inline std::vector<LabelPair> tower_labels(const SimplicialPolytope& p, const UniversalTower& t) {
  std::vector<LabelPair> out;
  for (const TowerPair& tp : t.pairs()) out.emplace_back(p.label(tp.x), p.label(tp.y));
  return out;
}

inline std::vector<TowerPair> resolve_tower(const SimplicialPolytope& p, const std::vector<LabelPair>& pairs) {
  std::vector<TowerPair> out;
  for (const auto& [x, y] : pairs) {
    const auto vx = p.find_label(x);
    const auto vy = p.find_label(y);
    if (!vx || !vy) throw Error(ErrorCode::Parse, "tower references unknown label '" + (vx ? y : x) + "'");
    out.push_back({*vx, *vy});
  }
  return out;
}

inline std::string tower_to_json(const std::vector<LabelPair>& pairs) {
  detail::ordered_json doc = detail::ordered_json::object();
  doc["format"] = "sewkit-tower";
  doc["version"] = kFormatVersion;
  detail::ordered_json arr = detail::ordered_json::array();
  for (const auto& [x, y] : pairs) arr.push_back(detail::ordered_json::array({x, y}));
  doc["pairs"] = std::move(arr);
  return doc.dump() + "\n";
}

inline std::vector<LabelPair> tower_from_json(std::string_view text) {
  try {
    const auto doc = detail::ordered_json::parse(text);
    detail::check_header(doc.at("format").get<std::string>(), doc.at("version").get<int>(), "sewkit-tower");
    std::vector<LabelPair> out;
    for (const auto& pr : doc.at("pairs")) out.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

// --- universal catalogs -------------------------------------------------

/// {"format": "sewkit-catalog", "version": 1, "universal": {"1": [[labels]...], "3": ...}}
inline std::string catalog_to_json(const SimplicialPolytope& p, const UniversalCatalog& cat) {
  using detail::ordered_json;
  ordered_json lists = ordered_json::object();
  for (const auto& [dim, faces] : cat.lists()) {
    ordered_json arr = ordered_json::array();
    for (VertexSet f : faces) arr.push_back(detail::label_array(p, f));
    lists[std::to_string(dim)] = std::move(arr);
  }
  std::ostringstream os;
  os << "{\n\"format\": \"sewkit-catalog\",\n\"version\": " << kFormatVersion << ",\n\"universal\": {\n";
  std::size_t i = 0;
  for (const auto& [key, arr] : lists.items()) {
    os << ordered_json(key).dump() << ": [\n";
    for (std::size_t k = 0; k < arr.size(); ++k) os << arr[k].dump() << (k + 1 < arr.size() ? ",\n" : "\n");
    os << "]" << (++i < lists.size() ? ",\n" : "\n");
  }
  os << "}\n}\n";
  return os.str();
}

inline UniversalCatalog catalog_from_json(const SimplicialPolytope& p, std::string_view text) {
  try {
    const auto doc = detail::ordered_json::parse(text);
    detail::check_header(doc.at("format").get<std::string>(), doc.at("version").get<int>(), "sewkit-catalog");
    UniversalCatalog cat;
    for (const auto& [key, arr] : doc.at("universal").items()) {
      std::vector<VertexSet> faces;
      for (const auto& f : arr) faces.push_back(detail::resolve_labels(f.get<std::vector<std::string>>(), p.labels()));
      cat.set(std::stoi(key), std::move(faces));
    }
    return cat;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace sewkit
