#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sewkit/cyclic.hpp"
#include "sewkit/neighbourly.hpp"
#include "sewkit/sewing.hpp"

using namespace sewkit;
using fixture::code_of;

namespace {

std::vector<VertexSet> members(const std::vector<MissingFace>& mf) {
  std::vector<VertexSet> out;
  for (const MissingFace& f : mf) out.push_back(f.members);
  return out;
}

std::vector<SimplicialPolytope> even_samples() {
  std::vector<SimplicialPolytope> out{cyclic_polytope(6, 4), cyclic_polytope(7, 4), cyclic_polytope(8, 4),
                                      cyclic_polytope(9, 6)};
  const auto c74 = cyclic_polytope(7, 4);
  out.push_back(sew(c74, find_towers(c74, 1).front()));
  const auto c96 = cyclic_polytope(9, 6);
  out.push_back(sew(c96, find_towers(c96, 1).front()));
  return out;
}

}  // namespace

TEST_CASE("neighbourliness", "[neighbourly]") {
  CHECK(is_neighbourly(fixture::pentagon()));
  CHECK(is_neighbourly(cyclic_polytope(6, 4)));
  CHECK_FALSE(is_neighbourly(fixture::cross_polytope_4()));
}

TEST_CASE("universal faces of C(6,4)", "[neighbourly]") {
  const auto c64 = cyclic_polytope(6, 4);
  CHECK(is_universal_face(c64, {0, 1}));
  CHECK_FALSE(is_universal_face(c64, {0, 2}));
  CHECK(is_universal_face(c64, {0, 1, 2, 3}));
  CHECK(code_of([&] { is_universal_face(c64, {0, 2, 4}); }) == ErrorCode::NotAFace);
  CHECK(code_of([] { is_universal_face(cyclic_polytope(5, 3), {0}); }) == ErrorCode::BadDimension);

  const auto edges = universal_faces(c64, 1);
  std::vector<VertexSet> expected;
  for (VertexSet e : faces_of_dimension(c64, 1)) {
    if (oracle::universal_by_definition(c64, e)) expected.push_back(e);
  }
  CHECK(edges == expected);
  CHECK(edges.size() == 9);
  CHECK(universal_faces(c64, 3) == c64.facets());
  CHECK(universal_faces(c64, 1, 4) == edges);

  CHECK(code_of([] { universal_faces(fixture::pentagon(), 1); }) == ErrorCode::BadDimension);
  CHECK(code_of([&] { universal_faces(c64, 2); }) == ErrorCode::BadDimension);
}

TEST_CASE("missing faces", "[neighbourly]") {
  const auto c64 = cyclic_polytope(6, 4);
  CHECK(members(missing_faces(c64)) == std::vector<VertexSet>{{0, 2, 4}, {1, 3, 5}});

  // the simplex boundary misses only its full vertex set
  const auto simplex = make_polytope(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(members(missing_faces(simplex)) == std::vector<VertexSet>{{0, 1, 2, 3}});

  const auto rel = missing_faces(c64, {0, 1});
  CHECK(members(rel) == std::vector<VertexSet>{{2, 4}, {3, 5}});
  for (const MissingFace& mf : rel) CHECK(mf.relative_to == VertexSet{0, 1});

  CHECK(code_of([&] { missing_faces(c64, {0, 2, 4}); }) == ErrorCode::NotAFace);
}

TEST_CASE("missing faces agree with subset enumeration", "[neighbourly][oracle]") {
  for (const auto& p : even_samples()) {
    REQUIRE(members(missing_faces(p)) == oracle::missing_by_subsets(p));
    for (VertexSet g : faces_of_dimension(p, 0)) REQUIRE(members(missing_faces(p, g)) == oracle::missing_by_subsets(p, g));
    for (VertexSet g : faces_of_dimension(p, 1)) REQUIRE(members(missing_faces(p, g)) == oracle::missing_by_subsets(p, g));
  }
}

TEST_CASE("missing faces are minimal and large", "[neighbourly][property]") {
  for (const auto& p : even_samples()) {
    const int m = p.dim() / 2;
    for (const MissingFace& mf : missing_faces(p)) {
      REQUIRE_FALSE(is_face(p, mf.members));
      for (VertexId v : mf.members) REQUIRE(is_face(p, mf.members.without(v)));
      // neighbourly: every m-set is a face
      REQUIRE(mf.members.size() >= m + 1);
    }
  }
}

TEST_CASE("two disjoint missing faces for d+2 vertices", "[neighbourly][property]") {
  for (int l : {2, 3}) {
    const auto p = cyclic_polytope(2 * l + 2, 2 * l);
    const auto mf = members(missing_faces(p));
    REQUIRE(mf.size() == 2);
    CHECK(mf[0].size() == l + 1);
    CHECK(mf[1].size() == l + 1);
    CHECK_FALSE(mf[0].intersects(mf[1]));
    CHECK((mf[0] | mf[1]) == p.vertices());
  }
}

TEST_CASE("three universality tests agree", "[neighbourly][property]") {
  for (const auto& p : even_samples()) {
    const auto absolute = missing_faces(p);
    for (int k = 1; k < p.dim(); k += 2) {
      for (VertexSet u : faces_of_dimension(p, k)) {
        const bool direct = is_universal_face(p, u);
        INFO(u);
        REQUIRE(direct == oracle::universal_by_definition(p, u));
        REQUIRE(direct == universal_via_missing(p, u, &absolute));
        if (u.size() <= p.dim() - 2) REQUIRE(direct == is_universal_via_quotient(p, u));
      }
    }
  }
}

TEST_CASE("a quotient by a universal face is neighbourly", "[neighbourly][property]") {
  const auto p = cyclic_polytope(7, 4);
  for (VertexSet u : universal_faces(p, 1)) {
    const auto q = quotient(p, u);
    REQUIRE(is_neighbourly(q.polytope));
    REQUIRE(q.polytope.num_vertices() == p.num_vertices() - 2);
  }
}
