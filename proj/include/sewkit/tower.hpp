#pragma once

#include <optional>
#include <vector>

#include "sewkit/neighbourly.hpp"
#include "sewkit/polytope.hpp"

namespace sewkit {

struct TowerPair {
  VertexId x = -1;
  VertexId y = -1;

  friend bool operator==(const TowerPair&, const TowerPair&) = default;
};

/// Nested universal faces Φ_1 ⊂ ... ⊂ Φ_m with Φ_j = Φ_{j-1} ∪ {x_j, y_j}.
/// Only validate_tower(), find_towers() and quotient_tower() create these,
/// so a tower in hand has been checked against its polytope.
class UniversalTower {
 public:
  int height() const { return static_cast<int>(pairs_.size()); }
  const std::vector<TowerPair>& pairs() const { return pairs_; }
  const TowerPair& pair(int j) const { return pairs_.at(static_cast<std::size_t>(j - 1)); }
  VertexId x(int j) const { return pair(j).x; }
  VertexId y(int j) const { return pair(j).y; }

  /// Φ_j for 0 <= j <= m (Φ_0 is empty).
  VertexSet phi(int j) const { return phi_.at(static_cast<std::size_t>(j)); }

  friend bool operator==(const UniversalTower&, const UniversalTower&) = default;

 private:
  friend UniversalTower validate_tower(const SimplicialPolytope&, const std::vector<TowerPair>&);
  friend UniversalTower quotient_tower(const UniversalTower&, int, const QuotientMap&);
  friend std::vector<UniversalTower> find_towers(const SimplicialPolytope&, std::optional<std::size_t>);

  explicit UniversalTower(std::vector<TowerPair> pairs) : pairs_(std::move(pairs)) {
    phi_.push_back({});
    for (const TowerPair& p : pairs_) phi_.push_back(phi_.back().with(p.x).with(p.y));
  }

  std::vector<TowerPair> pairs_;
  std::vector<VertexSet> phi_;
};

inline UniversalTower validate_tower(const SimplicialPolytope& p, const std::vector<TowerPair>& pairs) {
  if (p.dim() % 2 != 0) throw Error(ErrorCode::BadDimension, "towers live in even-dimensional polytopes");
  const int m = p.dim() / 2;
  if (static_cast<int>(pairs.size()) != m) {
    throw Error(ErrorCode::WrongLength, "tower needs " + std::to_string(m) + " pairs, got " +
                                            std::to_string(pairs.size()));
  }
  VertexSet seen;
  for (const TowerPair& tp : pairs) {
    for (VertexId v : {tp.x, tp.y}) {
      if (v < 0 || v >= p.num_vertices()) throw Error(ErrorCode::UnknownVertex, "tower vertex out of range");
      if (seen.contains(v)) throw Error(ErrorCode::DuplicateVertex, "vertex " + std::to_string(v) + " repeats");
      seen.insert(v);
    }
  }
  UniversalTower t(pairs);
  for (int j = 1; j <= m; ++j) {
    if (!is_face(p, t.phi(j)) || !is_universal_face(p, t.phi(j))) {
      throw Error(ErrorCode::NotUniversalAtLevel, "Φ_" + std::to_string(j) + " is not a universal face", j);
    }
  }
  return t;
}

enum class Side { Beneath, Beyond };

struct FacetClass {
  std::size_t facet_index = 0;
  int largest_j = 0;
  Side side = Side::Beneath;

  friend bool operator==(const FacetClass&, const FacetClass&) = default;
};

/// Largest j with Φ_j ⊆ f (0 if f misses Φ_1).
inline int tower_depth(const UniversalTower& t, VertexSet f) {
  for (int j = t.height(); j >= 1; --j) {
    if (t.phi(j).subset_of(f)) return j;
  }
  return 0;
}

/// The new vertex lies beyond exactly the facets of odd depth.
inline Side side_of(const UniversalTower& t, VertexSet f) {
  return tower_depth(t, f) % 2 == 1 ? Side::Beyond : Side::Beneath;
}

inline FacetClass classify_facet(const SimplicialPolytope& p, const UniversalTower& t, VertexSet f) {
  const auto idx = p.facet_index(f);
  if (!idx) throw Error(ErrorCode::NotAFacet, "classification is defined on facets only");
  const int depth = tower_depth(t, f);
  return {*idx, depth, depth % 2 == 1 ? Side::Beyond : Side::Beneath};
}

inline std::vector<FacetClass> classify_all(const SimplicialPolytope& p, const UniversalTower& t) {
  std::vector<FacetClass> out;
  out.reserve(p.num_facets());
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    const int depth = tower_depth(t, p.facets()[i]);
    out.push_back({i, depth, depth % 2 == 1 ? Side::Beyond : Side::Beneath});
  }
  return out;
}

struct SideCounts {
  std::size_t beneath = 0;
  std::size_t beyond = 0;
};

inline SideCounts count_sides(const std::vector<FacetClass>& classes) {
  SideCounts c;
  for (const FacetClass& fc : classes) (fc.side == Side::Beyond ? c.beyond : c.beneath)++;
  return c;
}

/// The tower T* of P/Φ_i: pairs i+1..m re-indexed through `map`, which must
/// be the quotient map of Φ_i.
inline UniversalTower quotient_tower(const UniversalTower& t, int i, const QuotientMap& map) {
  if (i < 0 || i >= t.height()) throw Error(ErrorCode::BadParameters, "quotient level out of range");
  if (map.face != t.phi(i)) throw Error(ErrorCode::BadParameters, "quotient map is not taken by Φ_i");
  std::vector<TowerPair> pairs;
  for (int j = i + 1; j <= t.height(); ++j) pairs.push_back({map.quotient_of(t.x(j)), map.quotient_of(t.y(j))});
  return UniversalTower(std::move(pairs));
}

struct TowerQuotient {
  Quotient quotient;
  UniversalTower tower;
};

inline TowerQuotient quotient_at_level(const SimplicialPolytope& p, const UniversalTower& t, int i) {
  Quotient q = quotient(p, t.phi(i));
  UniversalTower qt = quotient_tower(t, i, q.map);
#ifndef NDEBUG
  std::vector<TowerPair> pairs = qt.pairs();
  (void)validate_tower(q.polytope, pairs);
#endif
  return {std::move(q), std::move(qt)};
}

/// Depth-first search for universal towers. Pairs are normalized x < y and
/// candidates tried in lexicographic order, so the output order is fixed.
inline std::vector<UniversalTower> find_towers(const SimplicialPolytope& p, std::optional<std::size_t> limit = {}) {
  if (p.dim() % 2 != 0) throw Error(ErrorCode::BadDimension, "towers live in even-dimensional polytopes");
  if (!is_neighbourly(p)) throw Error(ErrorCode::NotNeighbourly, "tower search needs a neighbourly polytope");
  const int m = p.dim() / 2;
  const int n = p.num_vertices();
  std::vector<UniversalTower> out;
  std::vector<TowerPair> stack;

  auto extend = [&](auto&& self, VertexSet phi) -> bool {
    if (static_cast<int>(stack.size()) == m) {
      out.push_back(UniversalTower(stack));
      return !(limit && out.size() >= *limit);
    }
    const bool top = static_cast<int>(stack.size()) + 1 == m;
    for (VertexId x = 0; x < n; ++x) {
      if (phi.contains(x)) continue;
      for (VertexId y = x + 1; y < n; ++y) {
        if (phi.contains(y)) continue;
        const VertexSet next = phi.with(x).with(y);
        const bool ok = top ? p.has_facet(next) : (is_face(p, next) && is_universal_face(p, next));
        if (!ok) continue;
        stack.push_back({x, y});
        const bool more = self(self, next);
        stack.pop_back();
        if (!more) return false;
      }
    }
    return true;
  };
  if (!limit || *limit > 0) extend(extend, {});
  return out;
}

}  // namespace sewkit
