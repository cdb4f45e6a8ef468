#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sewkit/cyclic.hpp"
#include "sewkit/neighbourly.hpp"
#include "sewkit/sewing.hpp"

using namespace sewkit;
using fixture::code_of;

TEST_CASE("sewing a polygon adds a vertex on one edge", "[sewing]") {
  const auto p = fixture::pentagon();
  const auto t = validate_tower(p, {{1, 2}});
  const auto plus = sew(p, t, "new");
  CHECK(plus.num_vertices() == 6);
  CHECK(plus.label(5) == "new");
  CHECK(plus.facets() == std::vector<VertexSet>{{0, 1}, {0, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}});
  CHECK(plus == sew_bbp_oracle(p, t, "new"));
}

TEST_CASE("new labels", "[sewing]") {
  const auto c74 = cyclic_polytope(7, 4);
  const auto t = find_towers(c74, 1).front();
  const auto plus = sew(c74, t);
  CHECK(plus.label(7) == "s1");
  CHECK(sew(plus, find_towers(plus, 1).front()).label(8) == "s2");
  CHECK(fresh_label(make_polytope(2, {"s1", "s3", "x"}, {{0, 1}, {1, 2}, {0, 2}})) == "s2");
}

TEST_CASE("recursive sewing equals the beyond/beneath construction", "[sewing][oracle]") {
  for (const auto& c : fixture::corpus()) {
    const int n = c.polytope.num_vertices();
    const int m = c.polytope.dim() / 2;
    for (const auto& t : c.towers) {
      SewStats stats;
      const auto plus = sew(c.polytope, t, {}, &stats);
      REQUIRE(plus == sew_bbp_oracle(c.polytope, t));
      REQUIRE(plus.num_vertices() == n + 1);
      REQUIRE(plus.num_facets() == neighbourly_facet_count(n + 1, m));
      REQUIRE(plus.num_facets() == oracle::choose(n + 1 - m, m) + oracle::choose(n - m, m - 1));
      REQUIRE(is_neighbourly(plus));
      REQUIRE(stats.levels == static_cast<std::size_t>(m));
      REQUIRE(stats.facets_touched > 0);
      // the old polytope's beneath facets are all kept
      for (const FacetClass& fc : classify_all(c.polytope, t)) {
        REQUIRE(plus.has_facet(c.polytope.facets()[fc.facet_index]) == (fc.side == Side::Beneath));
      }
    }
  }
  CHECK(fixture::corpus()[0].towers.size() == 35);
  CHECK(sew(cyclic_polytope(7, 4), fixture::corpus()[0].towers.front()).num_facets() == 20);
}

TEST_CASE("the new vertex sees the tower", "[sewing][property]") {
  for (const auto& c : fixture::corpus()) {
    const VertexId apex = c.polytope.num_vertices();
    for (const auto& t : c.towers) {
      const auto plus = sew(c.polytope, t);
      for (int j = 1; j <= t.height(); ++j) {
        const VertexSet f = t.phi(j - 1).with(t.x(j)).with(apex);
        REQUIRE(is_face(plus, f));
        REQUIRE(is_face(plus, t.phi(j - 1).with(t.y(j)).with(apex)));
      }
    }
  }
}

TEST_CASE("swapping a pair's members gives the same polytope", "[sewing][property]") {
  const auto& c = fixture::corpus()[0];
  for (const auto& t : c.towers) {
    auto pairs = t.pairs();
    for (auto& tp : pairs) std::swap(tp.x, tp.y);
    REQUIRE(sew(c.polytope, validate_tower(c.polytope, pairs)) == sew(c.polytope, t));
  }
}

TEST_CASE("missing faces of the sewn polytope", "[sewing][oracle]") {
  for (const auto& c : fixture::corpus()) {
    for (const auto& t : c.towers) {
      const auto plus = sew(c.polytope, t);
      std::vector<VertexSet> predicted;
      for (const MissingFace& mf : sewn_missing_faces(c.polytope, t)) predicted.push_back(mf.members);
      REQUIRE(predicted == oracle::missing_by_subsets(plus));
    }
  }
}

TEST_CASE("quotients commute with sewing", "[sewing][property]") {
  for (const auto& c : fixture::corpus()) {
    for (const auto& t : c.towers) {
      for (int i = 1; i <= t.height(); ++i) REQUIRE(verify_main_theorem(c.polytope, t, i));
    }
  }
  const auto& t = fixture::corpus()[0].towers.front();
  CHECK(code_of([&] { verify_main_theorem(fixture::corpus()[0].polytope, t, 0); }) == ErrorCode::BadParameters);
  CHECK(code_of([&] { verify_main_theorem(fixture::corpus()[0].polytope, t, 3); }) == ErrorCode::BadParameters);
}

TEST_CASE("what is left of the tower after sewing", "[sewing][property]") {
  for (const auto& c : fixture::corpus()) {
    for (const auto& t : c.towers) {
      const auto report = verify_tower_leftovers(c.polytope, t);
      REQUIRE(report.checks.size() == static_cast<std::size_t>(2 * t.height()));
      REQUIRE(report.all_passed());
    }
  }
}

TEST_CASE("repeated sewing stays neighbourly", "[sewing][property]") {
  auto p = cyclic_polytope(7, 4);
  for (int step = 1; step <= 5; ++step) {
    const auto t = find_towers(p, 1).front();
    p = sew(p, t);
    REQUIRE(p.num_vertices() == 7 + step);
    REQUIRE(p.num_facets() == oracle::choose(p.num_vertices() - 2, 2) + oracle::choose(p.num_vertices() - 3, 1));
    REQUIRE(is_neighbourly(p));
  }
}

TEST_CASE("sewing preconditions", "[sewing]") {
  const auto c64 = cyclic_polytope(6, 4);
  const auto t64 = find_towers(c64, 1).front();
  CHECK(code_of([&] { sew(c64, t64); }) == ErrorCode::TooFewVertices);
  CHECK(code_of([&] { sew_bbp_oracle(c64, t64); }) == ErrorCode::TooFewVertices);

  const auto c96 = cyclic_polytope(9, 6);
  CHECK(code_of([&] { sew(c96, t64); }) == ErrorCode::InvalidTower);

  const auto p = fixture::pentagon();
  const auto t = validate_tower(p, {{0, 1}});
  CHECK(code_of([&] { sewn_missing_faces(p, t); }) == ErrorCode::BadDimension);
  CHECK(code_of([&] { verify_tower_leftovers(p, t); }) == ErrorCode::BadDimension);
}
