#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sewkit/cyclic.hpp"
#include "sewkit/tower.hpp"

using namespace sewkit;
using fixture::code_of;

namespace {

/// Beyond set as the alternating union (F1 \ F2) ∪ (F3 \ F4) ∪ ..., with F_j
/// the facets containing Φ_j.
std::set<VertexSet> alternating_union(const SimplicialPolytope& p, const UniversalTower& t) {
  auto through = [&](int j) {
    std::set<VertexSet> s;
    if (j > t.height()) return s;
    for (VertexSet f : p.facets()) {
      if (t.phi(j).subset_of(f)) s.insert(f);
    }
    return s;
  };
  std::set<VertexSet> out;
  for (int j = 1; j <= t.height(); j += 2) {
    const auto a = through(j), b = through(j + 1);
    for (VertexSet f : a) {
      if (!b.contains(f)) out.insert(f);
    }
  }
  return out;
}

/// All towers by testing every sequence of disjoint pairs against the
/// definition.
std::size_t count_towers_by_definition(const SimplicialPolytope& p) {
  const int n = p.num_vertices();
  const int m = p.dim() / 2;
  std::size_t count = 0;
  auto rec = [&](auto&& self, VertexSet phi, int level) -> void {
    if (level == m) {
      ++count;
      return;
    }
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = x + 1; y < n; ++y) {
        if (phi.contains(x) || phi.contains(y)) continue;
        const VertexSet next = phi.with(x).with(y);
        if (oracle::universal_by_definition(p, next)) self(self, next, level + 1);
      }
    }
  };
  rec(rec, {}, 0);
  return count;
}

}  // namespace

TEST_CASE("validate_tower", "[tower]") {
  const auto c64 = cyclic_polytope(6, 4);
  const auto t = validate_tower(c64, {{0, 1}, {2, 3}});
  CHECK(t.height() == 2);
  CHECK(t.phi(0).empty());
  CHECK(t.phi(1) == VertexSet{0, 1});
  CHECK(t.phi(2) == VertexSet{0, 1, 2, 3});
  CHECK(t.x(2) == 2);
  CHECK(t.y(2) == 3);

  try {
    validate_tower(c64, {{0, 2}, {1, 3}});
    FAIL("expected NotUniversalAtLevel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUniversalAtLevel);
    CHECK(e.level() == 1);
  }
  try {
    validate_tower(c64, {{0, 1}, {2, 4}});
    FAIL("expected NotUniversalAtLevel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUniversalAtLevel);
    CHECK(e.level() == 2);
  }
  CHECK(code_of([&] { validate_tower(c64, {{0, 1}}); }) == ErrorCode::WrongLength);
  CHECK(code_of([&] { validate_tower(c64, {{0, 1}, {1, 2}}); }) == ErrorCode::DuplicateVertex);
  CHECK(code_of([&] { validate_tower(c64, {{0, 1}, {2, 9}}); }) == ErrorCode::UnknownVertex);
  CHECK(code_of([] { validate_tower(cyclic_polytope(5, 3), {{0, 1}}); }) == ErrorCode::BadDimension);
  CHECK(validate_tower(fixture::pentagon(), {{1, 2}}).height() == 1);
}

TEST_CASE("facet classification", "[tower]") {
  const auto p = fixture::pentagon();
  const auto t = validate_tower(p, {{1, 2}});
  const auto counts = count_sides(classify_all(p, t));
  CHECK(counts.beyond == 1);
  CHECK(counts.beneath == 4);
  CHECK(classify_facet(p, t, {1, 2}).side == Side::Beyond);
  CHECK(code_of([&] { classify_facet(p, t, {0, 2}); }) == ErrorCode::NotAFacet);

  const auto c64 = cyclic_polytope(6, 4);
  const auto t64 = validate_tower(c64, {{0, 1}, {2, 3}});
  CHECK(classify_facet(c64, t64, {0, 1, 2, 3}).largest_j == 2);
  CHECK(classify_facet(c64, t64, {0, 1, 2, 3}).side == Side::Beneath);
  CHECK(classify_facet(c64, t64, {0, 1, 4, 5}).largest_j == 1);
  CHECK(classify_facet(c64, t64, {0, 1, 4, 5}).side == Side::Beyond);
  CHECK(classify_facet(c64, t64, {2, 3, 4, 5}).largest_j == 0);
  CHECK(classify_facet(c64, t64, {2, 3, 4, 5}).side == Side::Beneath);
}

TEST_CASE("classification matches the alternating union", "[tower][property]") {
  for (const auto& c : fixture::corpus()) {
    for (const auto& t : c.towers) {
      const auto expected = alternating_union(c.polytope, t);
      std::set<VertexSet> beyond;
      for (const FacetClass& fc : classify_all(c.polytope, t)) {
        if (fc.side == Side::Beyond) beyond.insert(c.polytope.facets()[fc.facet_index]);
      }
      REQUIRE(beyond == expected);
      REQUIRE_FALSE(beyond.empty());
    }
  }
}

TEST_CASE("swapping a pair's members changes nothing", "[tower][property]") {
  for (const auto& c : fixture::corpus()) {
    for (const auto& t : c.towers) {
      for (int j = 1; j <= t.height(); ++j) {
        auto pairs = t.pairs();
        std::swap(pairs[static_cast<std::size_t>(j - 1)].x, pairs[static_cast<std::size_t>(j - 1)].y);
        const auto swapped = validate_tower(c.polytope, pairs);
        REQUIRE(classify_all(c.polytope, swapped) == classify_all(c.polytope, t));
      }
    }
  }
}

TEST_CASE("quotient towers", "[tower]") {
  const auto c96 = cyclic_polytope(9, 6);
  for (const auto& t : find_towers(c96, 10)) {
    for (int i = 0; i < t.height(); ++i) {
      const auto tq = quotient_at_level(c96, t, i);
      REQUIRE(tq.tower.height() == t.height() - i);
      for (int j = 1; j <= tq.tower.height(); ++j) {
        REQUIRE(tq.quotient.map.base_of(tq.tower.x(j)) == t.x(i + j));
        REQUIRE(tq.quotient.map.base_of(tq.tower.y(j)) == t.y(i + j));
      }
      REQUIRE_NOTHROW(validate_tower(tq.quotient.polytope, tq.tower.pairs()));
    }
  }
  const auto t = find_towers(c96, 1).front();
  const auto q = quotient(c96, t.phi(2));
  CHECK(code_of([&] { quotient_tower(t, 1, q.map); }) == ErrorCode::BadParameters);
  CHECK(code_of([&] { quotient_tower(t, 3, q.map); }) == ErrorCode::BadParameters);
}

TEST_CASE("tower search", "[tower]") {
  const auto c64 = cyclic_polytope(6, 4);
  const auto towers = find_towers(c64);
  std::set<VertexSet> first;
  for (const auto& t : towers) first.insert(t.phi(1));
  CHECK(first.size() == universal_faces(c64, 1).size());
  CHECK(first.size() == 9);
  CHECK(towers.size() == count_towers_by_definition(c64));
  CHECK(find_towers(cyclic_polytope(7, 4)).size() == count_towers_by_definition(cyclic_polytope(7, 4)));
  CHECK(find_towers(c64, 3).size() == 3);
  CHECK(find_towers(c64, 0).empty());
  CHECK(code_of([] { find_towers(fixture::cross_polytope_4()); }) == ErrorCode::NotNeighbourly);

  for (const auto& t : towers) {
    REQUIRE_NOTHROW(validate_tower(c64, t.pairs()));
    for (const TowerPair& tp : t.pairs()) REQUIRE(tp.x < tp.y);
  }
  // deterministic order
  CHECK(find_towers(c64) == towers);
}
