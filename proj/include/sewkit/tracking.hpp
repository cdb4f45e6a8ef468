#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "sewkit/neighbourly.hpp"
#include "sewkit/sewing.hpp"
#include "sewkit/tower.hpp"

namespace sewkit {

/// Sorted lists of universal faces keyed by odd dimension 1, 3, ..., d-1.
class UniversalCatalog {
 public:
  bool has(int dim) const { return lists_.contains(dim); }

  const std::vector<VertexSet>& list(int dim) const {
    auto it = lists_.find(dim);
    if (it == lists_.end()) {
      throw Error(ErrorCode::CatalogOrderViolation, "no universal list for dimension " + std::to_string(dim));
    }
    return it->second;
  }

  bool contains(int dim, VertexSet face) const {
    const auto& l = list(dim);
    return std::binary_search(l.begin(), l.end(), face);
  }

  void set(int dim, std::vector<VertexSet> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    lists_[dim] = std::move(faces);
  }

  const std::map<int, std::vector<VertexSet>>& lists() const { return lists_; }

  friend bool operator==(const UniversalCatalog&, const UniversalCatalog&) = default;

 private:
  std::map<int, std::vector<VertexSet>> lists_;
};

/// Catalog by exhaustive universal-face tests.
inline UniversalCatalog brute_force_catalog(const SimplicialPolytope& p, unsigned threads = 1) {
  detail::require_even_dim(p);
  UniversalCatalog cat;
  for (int dim = 1; dim < p.dim(); dim += 2) {
    cat.set(dim, dim == p.dim() - 1 ? p.facets() : universal_faces(p, dim, threads));
  }
  return cat;
}

/// Whether a universal face U of P stays universal after sewing `apex` on
/// through `t`. With i the depth of U in the tower, this holds iff i is even
/// and [U, apex, v] is already listed one dimension up in the sewn catalog,
/// v being the member of pair i+1 outside U.
inline bool survives(const UniversalCatalog& sewn_so_far, const UniversalTower& t, VertexId apex, VertexSet u) {
  const int dim = u.size() - 1;
  if (!sewn_so_far.has(dim + 2)) {
    throw Error(ErrorCode::CatalogOrderViolation,
                "dimension " + std::to_string(dim + 2) + " must be tracked before dimension " + std::to_string(dim));
  }
  const int depth = tower_depth(t, u);
  if (depth % 2 != 0) return false;
  if (depth >= t.height()) throw Error(ErrorCode::BadParameters, "a facet has no higher universal list");
  const TowerPair& next = t.pair(depth + 1);
  const VertexId v = u.contains(next.x) ? next.y : next.x;
  return sewn_so_far.contains(dim + 2, u.with(apex).with(v));
}

struct TrackedSewing {
  SimplicialPolytope polytope;
  UniversalCatalog catalog;
};

/// Sews like sew() and carries the odd-dimensional universal faces along.
/// `catalog` must be the complete catalog of P.
inline TrackedSewing sew_with_tracking(const SimplicialPolytope& p, const UniversalTower& t,
                                       const UniversalCatalog& catalog, std::string new_label = {}) {
  detail::require_sewable(p, t);
  for (int dim = 1; dim < p.dim(); dim += 2) {
    if (!catalog.has(dim)) {
      throw Error(ErrorCode::BadParameters, "catalog lacks dimension " + std::to_string(dim));
    }
  }
  if (catalog.list(p.dim() - 1) != p.facets()) {
    throw Error(ErrorCode::BadParameters, "catalog's top list is not the facet list");
  }

  SewingLevels lv = build_levels(p, t);
  run_levels(lv);
  const int m = static_cast<int>(lv.levels.size());

  // Catalogs of the quotients: U* is universal in P/Φ_{i+1} iff its pullback
  // together with the next tower edge is universal in P/Φ_i.
  std::vector<UniversalCatalog> plain(static_cast<std::size_t>(m));
  plain[0] = catalog;
  for (int i = 0; i + 1 < m; ++i) {
    const SewingLevel& cur = lv.levels[static_cast<std::size_t>(i)];
    const SewingLevel& deep = lv.levels[static_cast<std::size_t>(i + 1)];
    const VertexSet edge{cur.tower.x(1), cur.tower.y(1)};
    for (int dim = 1; dim < deep.polytope.dim(); dim += 2) {
      std::vector<VertexSet> faces;
      for (VertexSet u : plain[static_cast<std::size_t>(i)].list(dim + 2)) {
        if (edge.subset_of(u)) faces.push_back(deep.to_parent.push(u - edge));
      }
      plain[static_cast<std::size_t>(i + 1)].set(dim, std::move(faces));
    }
  }

  std::vector<UniversalCatalog> sewn(static_cast<std::size_t>(m));
  sewn.back().set(1, lv.levels.back().sewn_facets);
  for (int i = m - 2; i >= 0; --i) {
    const SewingLevel& cur = lv.levels[static_cast<std::size_t>(i)];
    const SewingLevel& deep = lv.levels[static_cast<std::size_t>(i + 1)];
    const UniversalCatalog& deeper = sewn[static_cast<std::size_t>(i + 1)];
    UniversalCatalog& out = sewn[static_cast<std::size_t>(i)];
    const VertexId x = cur.tower.x(1);
    const VertexId y = cur.tower.y(1);
    const VertexId z = cur.sewn_vertex;
    auto pull = [&](VertexSet s) {
      VertexSet r;
      for (VertexId v : s) r.insert(v == deep.sewn_vertex ? y : deep.to_parent.base_of(v));
      return r;
    };

    const int top = cur.polytope.dim() - 1;
    out.set(top, cur.sewn_facets);
    // Descending: survival in dimension d' consults dimension d'+2.
    for (int dim = top - 2; dim >= 1; dim -= 2) {
      std::vector<VertexSet> faces;
      for (VertexSet u : plain[static_cast<std::size_t>(i)].list(dim)) {
        if (survives(out, cur.tower, z, u)) faces.push_back(u);
      }
      const std::vector<VertexSet> seed{VertexSet{}};
      const std::vector<VertexSet>& lower = dim == 1 ? seed : deeper.list(dim - 2);
      for (VertexSet g : lower) {
        faces.push_back(pull(g).with(x).with(z));
        if (!g.contains(deep.sewn_vertex)) faces.push_back(pull(g).with(y).with(z));
      }
      out.set(dim, std::move(faces));
    }
  }

  SimplicialPolytope plus = make_polytope(p.dim(), detail::extend_labels(p, std::move(new_label)),
                                          std::move(lv.levels.front().sewn_facets));
  return {std::move(plus), std::move(sewn.front())};
}

}  // namespace sewkit
