#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sewkit/polytope.hpp"

namespace sewkit::oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt determinant(std::vector<std::vector<BigInt>> a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Facets of the convex hull of the moment-curve points t = 1..n in R^d:
/// a d-subset is a facet iff every other point lies strictly on one side of
/// the hyperplane through it (exact integer orientation tests).
inline std::vector<VertexSet> moment_curve_facets(int n, int d) {
  auto row = [&](int v) {
    std::vector<BigInt> r;
    BigInt t = v + 1, pw = 1;
    for (int k = 0; k <= d; ++k) {
      r.push_back(pw);
      pw *= t;
    }
    return r;
  };
  std::vector<VertexSet> out;
  std::vector<int> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    int pos = 0, neg = 0;
    for (int u = 0; u < n; ++u) {
      if (std::find(idx.begin(), idx.end(), u) != idx.end()) continue;
      std::vector<std::vector<BigInt>> m;
      for (int v : idx) m.push_back(row(v));
      m.push_back(row(u));
      const BigInt det = determinant(m);
      (det > 0 ? pos : neg)++;
    }
    if (pos == 0 || neg == 0) out.push_back(VertexSet::from_range(idx));
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool face_by_scan(const SimplicialPolytope& p, VertexSet s) {
  for (VertexSet f : p.facets()) {
    if ((s.bits() & ~f.bits()) == 0) return true;
  }
  return false;
}

/// Minimal non-faces relative to G over all 2^|V \ G| subsets.
inline std::vector<VertexSet> missing_by_subsets(const SimplicialPolytope& p, VertexSet g = {}) {
  const std::vector<VertexId> free = (p.vertices() - g).to_vector();
  const std::size_t k = free.size();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    VertexSet m;
    for (std::size_t b = 0; b < k; ++b) {
      if ((mask >> b) & 1u) m.insert(free[b]);
    }
    if (face_by_scan(p, m | g)) continue;
    bool minimal = true;
    for (VertexId v : m) minimal = minimal && face_by_scan(p, m.without(v) | g);
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Universal by the subset definition, trying every S up to the size bound
/// (including sets that meet U).
inline bool universal_by_definition(const SimplicialPolytope& p, VertexSet u) {
  if (!face_by_scan(p, u)) return false;
  if (u.size() == p.dim()) return true;
  const int bound = (p.dim() - (u.size() - 1) - 1) / 2;
  const int n = p.num_vertices();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s = VertexSet::from_bits(mask);
    if (s.size() > bound) continue;
    if (!face_by_scan(p, s | u)) return false;
  }
  return true;
}

/// Isomorphism by trying every permutation (n <= 9).
inline bool isomorphic_by_permutation(const SimplicialPolytope& a, const SimplicialPolytope& b) {
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets()) return false;
  std::vector<VertexId> perm(static_cast<std::size_t>(a.num_vertices()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<VertexSet> img;
    for (VertexSet f : a.facets()) {
      VertexSet g;
      for (VertexId v : f) g.insert(perm[static_cast<std::size_t>(v)]);
      img.push_back(g);
    }
    std::sort(img.begin(), img.end());
    if (img == b.facets()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Number of C(n,2)-style pairs etc. without library help.
inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  return r;
}

}  // namespace sewkit::oracle
