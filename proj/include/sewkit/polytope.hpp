#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sewkit/error.hpp"
#include "sewkit/vertex_set.hpp"

namespace sewkit {

/// Boundary complex of a simplicial polytope, stored as its facet list.
///
/// Instances only come out of make_polytope() (or operations built on it),
/// so every object satisfies the structural invariants: simplicial facets,
/// each ridge in exactly two facets, a connected facet graph, and no unused
/// vertex ids. Facets are kept in lexicographic order.
class SimplicialPolytope {
 public:
  int dim() const { return dim_; }
  int num_vertices() const { return static_cast<int>(labels_.size()); }
  std::size_t num_facets() const { return facets_.size(); }
  VertexSet vertices() const { return VertexSet::first_n(num_vertices()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool has_facet(VertexSet f) const { return std::binary_search(facets_.begin(), facets_.end(), f); }
  std::optional<std::size_t> facet_index(VertexSet f) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    if (it == facets_.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - facets_.begin());
  }
  std::optional<VertexId> find_label(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
  }

  friend bool operator==(const SimplicialPolytope&, const SimplicialPolytope&) = default;

 private:
  friend SimplicialPolytope make_polytope(int, std::vector<std::string>, std::vector<VertexSet>);

  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<VertexSet> facets_;
};

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

namespace detail {

struct RidgeSlot {
  int count = 0;
  int first = -1;
  int second = -1;
};

using RidgeTable = std::unordered_map<VertexSet, RidgeSlot, VertexSetHash>;

inline RidgeTable ridge_table(const std::vector<VertexSet>& facets) {
  RidgeTable table;
  table.reserve(facets.size() * 4);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (VertexId v : facets[i]) {
      RidgeSlot& slot = table[facets[i].without(v)];
      if (slot.count == 0) {
        slot.first = static_cast<int>(i);
      } else if (slot.count == 1) {
        slot.second = static_cast<int>(i);
      }
      ++slot.count;
    }
  }
  return table;
}

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

inline bool label_ok(const std::string& s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || c == '"' || c == '#';
  });
}

}  // namespace detail

/// Validates and canonicalizes a facet list. Checks run in a fixed order
/// (facet sizes, ridge multiplicities, duplicates, vertex coverage,
/// connectivity), so a malformed input reports the first failing check.
inline SimplicialPolytope make_polytope(int dim, std::vector<std::string> labels, std::vector<VertexSet> facets) {
  if (dim < 1) throw Error(ErrorCode::BadParameters, "dimension must be at least 1");
  if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(ErrorCode::TooManyVertices, std::to_string(labels.size()) + " vertices exceed the cap of 64");
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!detail::label_ok(l)) throw Error(ErrorCode::BadParameters, "invalid label '" + l + "'");
      if (!seen.insert(l).second) throw Error(ErrorCode::BadParameters, "duplicate label '" + l + "'");
    }
  }
  const VertexSet all = VertexSet::first_n(static_cast<int>(labels.size()));
  if (facets.empty()) throw Error(ErrorCode::BadParameters, "empty facet list");
  for (VertexSet f : facets) {
    if (!f.subset_of(all)) throw Error(ErrorCode::UnknownVertex, "facet references undeclared vertex");
    if (f.size() != dim) {
      throw Error(ErrorCode::NonSimplicial, "facet has " + std::to_string(f.size()) + " vertices, expected " +
                                                std::to_string(dim));
    }
  }

  std::sort(facets.begin(), facets.end());
  const detail::RidgeTable table = detail::ridge_table(facets);
  for (const auto& [ridge, slot] : table) {
    if (slot.count != 2) {
      std::ostringstream msg;
      msg << "ridge " << ridge << " lies in " << slot.count << " facets";
      throw Error(ErrorCode::BadRidge, msg.str());
    }
  }

  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) {
    throw Error(ErrorCode::DuplicateFacet, "facet listed twice");
  }

  VertexSet covered;
  for (VertexSet f : facets) covered |= f;
  if (covered != all) {
    throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string((all - covered).front()) + " is in no facet");
  }

  std::vector<int> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = facets.size();
  for (const auto& [ridge, slot] : table) {
    const int a = detail::find_root(parent, slot.first);
    const int b = detail::find_root(parent, slot.second);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  if (components != 1) throw Error(ErrorCode::Disconnected, "facet adjacency graph is disconnected");

  SimplicialPolytope p;
  p.dim_ = dim;
  p.labels_ = std::move(labels);
  p.facets_ = std::move(facets);
  return p;
}

inline SimplicialPolytope make_polytope(int dim, int num_vertices, std::vector<VertexSet> facets) {
  if (num_vertices > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, std::to_string(num_vertices) + " vertices exceed the cap of 64");
  }
  return make_polytope(dim, default_labels(num_vertices), std::move(facets));
}

/// For a simplicial polytope a vertex set is a face iff some facet contains it.
inline bool is_face(const SimplicialPolytope& p, VertexSet s) {
  if (!s.subset_of(p.vertices())) throw Error(ErrorCode::UnknownVertex, "set is not within the vertex range");
  if (s.empty()) return true;
  return std::any_of(p.facets().begin(), p.facets().end(), [s](VertexSet f) { return s.subset_of(f); });
}

struct Ridge {
  VertexSet ridge;
  std::size_t first_facet;
  std::size_t second_facet;

  friend bool operator==(const Ridge&, const Ridge&) = default;
};

/// All (d-2)-faces with their two incident facets (indices into facets(),
/// first < second), sorted by ridge.
inline std::vector<Ridge> ridges(const SimplicialPolytope& p) {
  const detail::RidgeTable table = detail::ridge_table(p.facets());
  std::vector<Ridge> out;
  out.reserve(table.size());
  for (const auto& [ridge, slot] : table) {
    out.push_back({ridge, static_cast<std::size_t>(std::min(slot.first, slot.second)),
                   static_cast<std::size_t>(std::max(slot.first, slot.second))});
  }
  std::sort(out.begin(), out.end(), [](const Ridge& a, const Ridge& b) { return a.ridge < b.ridge; });
  return out;
}

/// Re-indexing between a quotient P/G and its base P. Quotient vertex q
/// corresponds to base vertex to_base[q]; base vertices outside the quotient
/// (the face itself) map to -1 in from_base.
struct QuotientMap {
  VertexSet face;
  std::vector<VertexId> to_base;
  std::vector<VertexId> from_base;

  VertexId base_of(VertexId q) const { return to_base.at(static_cast<std::size_t>(q)); }
  VertexId quotient_of(VertexId b) const { return from_base.at(static_cast<std::size_t>(b)); }

  VertexSet pullback(VertexSet q) const {
    VertexSet out;
    for (VertexId v : q) out.insert(base_of(v));
    return out;
  }
  /// Base set (disjoint from the face) expressed in quotient ids.
  VertexSet push(VertexSet base) const {
    VertexSet out;
    for (VertexId v : base) {
      const VertexId q = quotient_of(v);
      if (q < 0) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " is not in the quotient");
      out.insert(q);
    }
    return out;
  }
};

struct Quotient {
  SimplicialPolytope polytope;
  QuotientMap map;
};

/// P/G: the facets containing G with G removed, re-indexed onto the
/// vertices that occur in them (ascending base order).
inline Quotient quotient(const SimplicialPolytope& p, VertexSet g) {
  if (!is_face(p, g)) throw Error(ErrorCode::NotAFace, "cannot take a quotient by a non-face");
  if (g.size() > p.dim() - 2) {
    throw Error(ErrorCode::FaceTooLarge, "quotient by a face with " + std::to_string(g.size()) +
                                             " vertices in dimension " + std::to_string(p.dim()));
  }
  const int n = p.num_vertices();
  std::vector<VertexSet> links;
  VertexSet used;
  for (VertexSet f : p.facets()) {
    if (g.subset_of(f)) {
      links.push_back(f - g);
      used |= f - g;
    }
  }
  QuotientMap map;
  map.face = g;
  map.from_base.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::string> labels;
  for (VertexId v : used) {
    map.from_base[static_cast<std::size_t>(v)] = static_cast<VertexId>(map.to_base.size());
    map.to_base.push_back(v);
    labels.push_back(p.label(v));
  }
  for (VertexSet& f : links) f = map.push(f);
  try {
    return {make_polytope(p.dim() - g.size(), std::move(labels), std::move(links)), std::move(map)};
  } catch (const Error& e) {
    throw Error(ErrorCode::QuotientNotPolytopal, e.what());
  }
}

namespace detail {

inline std::vector<VertexSet> relabel_facets(const std::vector<VertexSet>& facets,
                                             const std::vector<VertexId>& mapping) {
  std::vector<VertexSet> out;
  out.reserve(facets.size());
  for (VertexSet f : facets) {
    VertexSet g;
    for (VertexId v : f) g.insert(mapping[static_cast<std::size_t>(v)]);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> vertex_degrees(const SimplicialPolytope& p) {
  std::vector<int> deg(static_cast<std::size_t>(p.num_vertices()), 0);
  for (VertexSet f : p.facets()) {
    for (VertexId v : f) ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

}  // namespace detail

inline constexpr int kMaxIsomorphismSearch = 12;

/// With `mapping` (P id -> Q id): checks that it carries the facets of P
/// exactly onto the facets of Q. Without: backtracking search for such a
/// bijection, matching facet degrees and checking each facet of P as soon
/// as all of its vertices are assigned. Returns the witness bijection.
inline std::optional<std::vector<VertexId>> are_isomorphic(const SimplicialPolytope& p, const SimplicialPolytope& q,
                                                           std::optional<std::vector<VertexId>> mapping = {}) {
  const int n = p.num_vertices();
  if (p.dim() != q.dim() || n != q.num_vertices() || p.num_facets() != q.num_facets()) return std::nullopt;

  if (mapping) {
    if (mapping->size() != static_cast<std::size_t>(n)) return std::nullopt;
    VertexSet image;
    for (VertexId v : *mapping) {
      if (v < 0 || v >= n || image.contains(v)) return std::nullopt;
      image.insert(v);
    }
    if (detail::relabel_facets(p.facets(), *mapping) != q.facets()) return std::nullopt;
    return mapping;
  }

  if (n > kMaxIsomorphismSearch) {
    throw Error(ErrorCode::SearchTooLarge, "isomorphism search limited to " +
                                               std::to_string(kMaxIsomorphismSearch) + " vertices");
  }
  const std::vector<int> pdeg = detail::vertex_degrees(p);
  const std::vector<int> qdeg = detail::vertex_degrees(q);
  {
    std::vector<int> a = pdeg, b = qdeg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Assign P's vertices in ascending id order; a facet becomes checkable when
  // its largest vertex is assigned.
  std::vector<std::vector<VertexSet>> closing(static_cast<std::size_t>(n));
  for (VertexSet f : p.facets()) closing[static_cast<std::size_t>(f.back())].push_back(f);

  std::vector<VertexId> assign(static_cast<std::size_t>(n), -1);
  VertexSet used;
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (VertexId w = 0; w < n; ++w) {
      if (used.contains(w) || qdeg[static_cast<std::size_t>(w)] != pdeg[static_cast<std::size_t>(v)]) continue;
      assign[static_cast<std::size_t>(v)] = w;
      bool ok = true;
      for (VertexSet f : closing[static_cast<std::size_t>(v)]) {
        VertexSet img;
        for (VertexId u : f) img.insert(assign[static_cast<std::size_t>(u)]);
        if (!q.has_facet(img)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used.insert(w);
        if (self(self, v + 1)) return true;
        used.erase(w);
      }
    }
    assign[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  // Facet counts agree and every facet of P lands on a facet of Q, so the
  // induced map on facets is a bijection once the search completes.
  if (!extend(extend, 0)) return std::nullopt;
  return assign;
}

}  // namespace sewkit
