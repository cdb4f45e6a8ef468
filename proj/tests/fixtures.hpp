#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "sewkit/cyclic.hpp"
#include "sewkit/polytope.hpp"
#include "sewkit/sewing.hpp"
#include "sewkit/tower.hpp"

namespace sewkit::fixture {

inline SimplicialPolytope pentagon() { return make_polytope(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

inline SimplicialPolytope cross_polytope_4() {
  std::vector<VertexSet> facets;
  for (int mask = 0; mask < 16; ++mask) {
    VertexSet f;
    for (int i = 0; i < 4; ++i) f.insert(2 * i + ((mask >> i) & 1));
    facets.push_back(f);
  }
  return make_polytope(4, 8, facets);
}

inline ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IO;
}

/// The corpus shared by the sewing tests: every tower of C(7,4) and the first
/// few of C(9,6).
struct Corpus {
  SimplicialPolytope polytope;
  std::vector<UniversalTower> towers;
};

inline const std::vector<Corpus>& corpus() {
  static const std::vector<Corpus> c = [] {
    std::vector<Corpus> out;
    const auto c74 = cyclic_polytope(7, 4);
    out.push_back({c74, find_towers(c74)});
    const auto c96 = cyclic_polytope(9, 6);
    out.push_back({c96, find_towers(c96, 5)});
    return out;
  }();
  return c;
}

}  // namespace sewkit::fixture
