#pragma once

#include <vector>

#include "sewkit/polytope.hpp"

namespace sewkit {

/// Gale's evenness condition on the linear order 0 < 1 < ... < n-1: any two
/// non-members must be separated by an even number of members.
inline bool gale_even(VertexSet s, int n) {
  const VertexSet outside = VertexSet::first_n(n) - s;
  VertexId prev = -1;
  for (VertexId v : outside) {
    if (prev >= 0) {
      const VertexSet between = s & (VertexSet::first_n(v) - VertexSet::first_n(prev + 1));
      if (between.size() % 2 != 0) return false;
    }
    prev = v;
  }
  return true;
}

/// Facets of the cyclic polytope C(n,d), vertices in moment-curve order.
inline SimplicialPolytope cyclic_polytope(int n, int d) {
  if (d < 2 || n < d + 1 || n > kMaxVertices) {
    throw Error(ErrorCode::BadParameters,
                "cyclic polytope needs d >= 2 and d+1 <= n <= 64 (got n=" + std::to_string(n) +
                    ", d=" + std::to_string(d) + ")");
  }
  std::vector<VertexSet> facets;
  for_each_subset(VertexSet::first_n(n), d, [&](VertexSet s) {
    if (gale_even(s, n)) facets.push_back(s);
    return true;
  });
  return make_polytope(d, n, std::move(facets));
}

/// Facet count of a neighbourly 2m-polytope with n vertices.
inline std::uint64_t neighbourly_facet_count(int n, int m) {
  return binomial(n - m, m) + binomial(n - m - 1, m - 1);
}

}  // namespace sewkit
