#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sewkit/neighbourly.hpp"
#include "sewkit/polytope.hpp"
#include "sewkit/tower.hpp"

namespace sewkit {

/// Work counters for one sew() call: facet records read or written across
/// all levels.
struct SewStats {
  std::size_t facets_touched = 0;
  std::size_t levels = 0;
};

/// One quotient level P/Φ_i of the sewing recursion.
struct SewingLevel {
  SimplicialPolytope polytope;
  /// Ids of this level in terms of the previous (shallower) level. Identity
  /// for level 0.
  QuotientMap to_parent;
  UniversalTower tower;
  VertexId sewn_vertex = -1;
  std::vector<VertexSet> sewn_facets;
};

struct SewingLevels {
  std::vector<SewingLevel> levels;
};

/// First label of the form s1, s2, ... not already used by `p`.
inline std::string fresh_label(const SimplicialPolytope& p) {
  for (int k = 1;; ++k) {
    std::string l = "s" + std::to_string(k);
    if (!p.find_label(l)) return l;
  }
}

namespace detail {

inline void require_sewable(const SimplicialPolytope& p, const UniversalTower& t) {
  if (p.dim() % 2 != 0) throw Error(ErrorCode::BadDimension, "sewing needs an even-dimensional polytope");
  const int m = p.dim() / 2;
  if (p.num_vertices() < 2 * m + 3) {
    throw Error(ErrorCode::TooFewVertices, "sewing a " + std::to_string(p.dim()) + "-polytope needs at least " +
                                               std::to_string(2 * m + 3) + " vertices, got " +
                                               std::to_string(p.num_vertices()));
  }
  if (t.height() != m) throw Error(ErrorCode::InvalidTower, "tower height does not match the dimension");
  for (int j = 1; j <= m; ++j) {
    if (!t.phi(j).subset_of(p.vertices())) throw Error(ErrorCode::InvalidTower, "tower leaves the vertex range");
  }
}

inline std::vector<std::string> extend_labels(const SimplicialPolytope& p, std::string label) {
  std::vector<std::string> labels = p.labels();
  labels.push_back(label.empty() ? fresh_label(p) : std::move(label));
  return labels;
}

inline QuotientMap identity_map(int n) {
  QuotientMap map;
  for (VertexId v = 0; v < n; ++v) map.to_base.push_back(v);
  map.from_base = map.to_base;
  return map;
}

}  // namespace detail

/// Quotients P/Φ_0, ..., P/Φ_{m-1}, each taken from the one before it by the
/// next tower edge, with their quotient towers.
inline SewingLevels build_levels(const SimplicialPolytope& p, const UniversalTower& t, SewStats* stats = nullptr) {
  SewingLevels out;
  const int m = t.height();
  out.levels.push_back({p, detail::identity_map(p.num_vertices()), t, p.num_vertices(), {}});
  for (int i = 1; i < m; ++i) {
    const SewingLevel& prev = out.levels.back();
    const TowerPair& edge = prev.tower.pair(1);
    Quotient q = quotient(prev.polytope, VertexSet{edge.x, edge.y});
    if (stats) stats->facets_touched += prev.polytope.num_facets() + q.polytope.num_facets();
    UniversalTower qt = quotient_tower(prev.tower, 1, q.map);
    const VertexId z = q.polytope.num_vertices();
    out.levels.push_back({std::move(q.polytope), std::move(q.map), std::move(qt), z, {}});
  }
  return out;
}

/// Fills in sewn_facets for every level, deepest first. The deepest level is
/// a polygon; each shallower level is assembled from its own beneath facets
/// and the two copies of the deeper sewn polytope glued along x and y.
inline void run_levels(SewingLevels& lv, SewStats* stats = nullptr) {
  const int m = static_cast<int>(lv.levels.size());
  {
    SewingLevel& base = lv.levels.back();
    const TowerPair& e = base.tower.pair(1);
    const VertexSet edge{e.x, e.y};
    for (VertexSet f : base.polytope.facets()) {
      if (f != edge) base.sewn_facets.push_back(f);
    }
    base.sewn_facets.push_back(VertexSet{e.x, base.sewn_vertex});
    base.sewn_facets.push_back(VertexSet{e.y, base.sewn_vertex});
    std::sort(base.sewn_facets.begin(), base.sewn_facets.end());
    if (stats) stats->facets_touched += base.polytope.num_facets() + base.sewn_facets.size();
  }
  for (int i = m - 2; i >= 0; --i) {
    SewingLevel& cur = lv.levels[static_cast<std::size_t>(i)];
    const SewingLevel& deep = lv.levels[static_cast<std::size_t>(i + 1)];
    const VertexId x = cur.tower.x(1);
    const VertexId y = cur.tower.y(1);
    const VertexId z = cur.sewn_vertex;
    const QuotientMap& up = deep.to_parent;
    auto pull = [&](VertexSet s, VertexId deep_sewn_image) {
      VertexSet out;
      for (VertexId v : s) out.insert(v == deep.sewn_vertex ? deep_sewn_image : up.base_of(v));
      return out;
    };

    std::vector<VertexSet>& facets = cur.sewn_facets;
    facets.reserve(cur.polytope.num_facets() + deep.sewn_facets.size() + deep.polytope.num_facets());
    // beneath facets survive unchanged
    for (VertexSet f : cur.polytope.facets()) {
      if (side_of(cur.tower, f) == Side::Beneath) facets.push_back(f);
    }
    // facets through {x, z}: the deeper sewn polytope, its new vertex read as y
    for (VertexSet g : deep.sewn_facets) facets.push_back(pull(g, y).with(x).with(z));
    // facets through {y, z} avoiding x: the deeper beneath facets
    for (VertexSet f : deep.polytope.facets()) {
      if (side_of(deep.tower, f) == Side::Beneath) facets.push_back(pull(f, y).with(y).with(z));
    }
    std::sort(facets.begin(), facets.end());
    if (stats) {
      stats->facets_touched += cur.polytope.num_facets() + deep.sewn_facets.size() + deep.polytope.num_facets() +
                               facets.size();
    }
  }
  if (stats) stats->levels = static_cast<std::size_t>(m);
}

/// Sews a new vertex onto P through T. The new vertex gets id n and the given
/// label (or the first unused s1, s2, ... when empty).
inline SimplicialPolytope sew(const SimplicialPolytope& p, const UniversalTower& t, std::string new_label = {},
                              SewStats* stats = nullptr) {
  detail::require_sewable(p, t);
  SewingLevels lv = build_levels(p, t, stats);
  run_levels(lv, stats);
  return make_polytope(p.dim(), detail::extend_labels(p, std::move(new_label)),
                       std::move(lv.levels.front().sewn_facets));
}

/// Reference construction straight from the beyond/beneath classification:
/// keep the beneath facets and cone the new vertex over every ridge whose two
/// facets fall on opposite sides.
inline SimplicialPolytope sew_bbp_oracle(const SimplicialPolytope& p, const UniversalTower& t,
                                         std::string new_label = {}) {
  detail::require_sewable(p, t);
  const VertexId apex = p.num_vertices();
  const std::vector<FacetClass> classes = classify_all(p, t);
  std::vector<VertexSet> facets;
  for (const FacetClass& c : classes) {
    if (c.side == Side::Beneath) facets.push_back(p.facets()[c.facet_index]);
  }
  for (const Ridge& r : ridges(p)) {
    if (classes[r.first_facet].side != classes[r.second_facet].side) facets.push_back(r.ridge.with(apex));
  }
  return make_polytope(p.dim(), detail::extend_labels(p, std::move(new_label)), std::move(facets));
}

namespace detail {

/// Missing faces of P relative to the face G, computed as the missing faces
/// of P/G pulled back when the quotient exists.
inline std::vector<VertexSet> relative_missing(const SimplicialPolytope& p, VertexSet g) {
  std::vector<VertexSet> out;
  if (!g.empty() && g.size() <= p.dim() - 2) {
    const Quotient q = quotient(p, g);
    for (const MissingFace& mf : missing_faces(q.polytope)) out.push_back(q.map.pullback(mf.members));
    // vertices that drop out of the quotient are singleton missing faces
    for (VertexId v : p.vertices() - g) {
      if (q.map.quotient_of(v) < 0) out.push_back(VertexSet{v});
    }
  } else {
    for (const MissingFace& mf : missing_faces(p, g)) out.push_back(mf.members);
  }
  return out;
}

inline void require_tall_tower(const UniversalTower& t) {
  if (t.height() < 2) throw Error(ErrorCode::BadDimension, "needs a tower of height m > 1");
}

}  // namespace detail

/// Missing faces of the sewn polytope read off the tower and the relative
/// missing faces of P, without building P⁺. The new vertex has id n.
inline std::vector<MissingFace> sewn_missing_faces(const SimplicialPolytope& p, const UniversalTower& t) {
  detail::require_sewable(p, t);
  detail::require_tall_tower(t);
  const int m = t.height();
  const VertexId apex = p.num_vertices();
  std::vector<MissingFace> out;
  // Φ_{m+1} is the whole polytope, whose only relative missing face is ∅.
  auto missing_over = [&](int level) -> std::vector<VertexSet> {
    if (level == m + 1) return {VertexSet{}};
    return detail::relative_missing(p, t.phi(level));
  };

  VertexSet odd_pairs;
  for (int j = 0; 2 * j <= m + 1; ++j) {
    if (j > 0) odd_pairs = odd_pairs.with(t.x(2 * j - 1)).with(t.y(2 * j - 1));
    for (VertexSet a : missing_over(2 * j)) out.push_back({odd_pairs | a, {}});
  }
  VertexSet even_pairs;
  for (int j = 0; 2 * j <= m; ++j) {
    if (j > 0) even_pairs = even_pairs.with(t.x(2 * j)).with(t.y(2 * j));
    for (VertexSet a : missing_over(2 * j + 1)) out.push_back({(even_pairs | a).with(apex), {}});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Checks (P/Φ_i)⁺ ≅ P⁺/[Φ_{i-1}, x_i, x̄] under v* -> v**, ȳ* -> y_i**.
/// At i = m the quotient side would be 0-dimensional; there the check is that
/// [Φ_{m-1}, x_m, x̄] is a facet (hence universal) of P⁺.
inline bool verify_main_theorem(const SimplicialPolytope& p, const UniversalTower& t, int i) {
  const int m = t.height();
  if (i < 1 || i > m) throw Error(ErrorCode::BadParameters, "level must satisfy 1 <= i <= m");
  const SimplicialPolytope plus = sew(p, t);
  const VertexId apex = p.num_vertices();
  const VertexSet face = t.phi(i - 1).with(t.x(i)).with(apex);
  if (i == m) return plus.has_facet(face) && is_universal_face(plus, face);

  const TowerQuotient left_q = quotient_at_level(p, t, i);
  const SimplicialPolytope left = sew(left_q.quotient.polytope, left_q.tower);
  const Quotient right = quotient(plus, face);

  const int nl = left.num_vertices();
  std::vector<VertexId> phi(static_cast<std::size_t>(nl), -1);
  for (VertexId v = 0; v + 1 < nl; ++v) {
    phi[static_cast<std::size_t>(v)] = right.map.quotient_of(left_q.quotient.map.base_of(v));
  }
  phi[static_cast<std::size_t>(nl - 1)] = right.map.quotient_of(t.y(i));
  if (std::find(phi.begin(), phi.end(), -1) != phi.end()) return false;
  return are_isomorphic(left, right.polytope, phi).has_value();
}

struct LeftoverCheck {
  int clause = 0;  // 1: even Φ_j universal, 2: odd Φ_j not universal (face if j < m), 3: [Φ_{j-1}, x_j, x̄] universal
  int level = 0;
  bool passed = false;
};

struct LeftoverReport {
  std::vector<LeftoverCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LeftoverCheck& c) { return c.passed; });
  }
};

/// How the tower sits inside P⁺. For odd j = m nothing is claimed about
/// whether Φ_m is still a face, so only non-universality is checked there.
inline LeftoverReport verify_tower_leftovers(const SimplicialPolytope& p, const UniversalTower& t) {
  detail::require_tall_tower(t);
  const SimplicialPolytope plus = sew(p, t);
  const int m = t.height();
  const VertexId apex = p.num_vertices();
  LeftoverReport report;
  for (int j = 1; j <= m; ++j) {
    const VertexSet phi = t.phi(j);
    const bool face = is_face(plus, phi);
    if (j % 2 == 0) {
      report.checks.push_back({1, j, face && is_universal_face(plus, phi)});
    } else {
      bool ok = !face || !is_universal_face(plus, phi);
      if (j < m) ok = ok && face;
      report.checks.push_back({2, j, ok});
    }
    const VertexSet cone = t.phi(j - 1).with(t.x(j)).with(apex);
    report.checks.push_back({3, j, is_face(plus, cone) && is_universal_face(plus, cone)});
  }
  return report;
}

}  // namespace sewkit
