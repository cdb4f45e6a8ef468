#pragma once

#include <algorithm>
#include <thread>
#include <unordered_set>
#include <vector>

#include "sewkit/polytope.hpp"

namespace sewkit {

/// A minimal non-face of P relative to a face G: [M ∪ G] is not a face but
/// [M' ∪ G] is for every proper subset M'. relative_to is empty for the
/// absolute missing faces.
struct MissingFace {
  VertexSet members;
  VertexSet relative_to;

  friend bool operator==(const MissingFace&, const MissingFace&) = default;
  friend auto operator<=>(const MissingFace& a, const MissingFace& b) {
    if (auto c = a.members <=> b.members; c != 0) return c;
    return a.relative_to <=> b.relative_to;
  }
};

namespace detail {

using FaceSet = std::unordered_set<VertexSet, VertexSetHash>;

inline FaceSet faces_of_size(const std::vector<VertexSet>& cells, int k) {
  FaceSet out;
  for (VertexSet c : cells) {
    for_each_subset(c, k, [&](VertexSet s) {
      out.insert(s);
      return true;
    });
  }
  return out;
}

/// Minimal non-faces (within `ground`) of the complex generated by `cells`.
inline std::vector<VertexSet> minimal_nonfaces(const std::vector<VertexSet>& cells, VertexSet ground) {
  int top = 0;
  for (VertexSet c : cells) top = std::max(top, c.size());
  std::vector<VertexSet> out;
  FaceSet current = faces_of_size(cells, 0);
  for (int k = 0; k <= top; ++k) {
    const FaceSet next = faces_of_size(cells, k + 1);
    for (VertexSet face : current) {
      const VertexSet above = ground - VertexSet::first_n(face.back() + 1);
      for (VertexId v : above) {
        const VertexSet cand = face.with(v);
        if (next.contains(cand)) continue;
        bool minimal = true;
        for (VertexId u : cand) {
          if (!current.contains(cand.without(u))) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back(cand);
      }
    }
    current = next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_even_dim(const SimplicialPolytope& p) {
  if (p.dim() % 2 != 0) {
    throw Error(ErrorCode::BadDimension, "universal faces are defined for even-dimensional polytopes, got d=" +
                                             std::to_string(p.dim()));
  }
}

}  // namespace detail

/// Every floor(d/2) vertices span a face.
inline bool is_neighbourly(const SimplicialPolytope& p) {
  const int k = p.dim() / 2;
  const auto spanned = detail::faces_of_size(p.facets(), k);
  return spanned.size() == binomial(p.num_vertices(), k);
}

/// Universal by the subset form: U is a facet, or [S ∪ U] is a face for
/// every S with |S| <= floor((d-k-1)/2), k = dim U.
inline bool is_universal_face(const SimplicialPolytope& p, VertexSet u) {
  detail::require_even_dim(p);
  if (!is_face(p, u)) throw Error(ErrorCode::NotAFace, "universality is only defined for faces");
  if (u.size() == p.dim()) return true;
  const int k = u.size() - 1;
  const int bound = (p.dim() - k - 1) / 2;
  const VertexSet rest = p.vertices() - u;
  const int take = std::min(bound, rest.size());
  // Faces are closed under subsets, so the maximal S are enough.
  return for_each_subset(rest, take, [&](VertexSet s) { return is_face(p, u | s); });
}

/// Universal by the quotient form: P/U is neighbourly and keeps every vertex
/// outside U. Quotients by ridges are refused (FaceTooLarge).
inline bool is_universal_via_quotient(const SimplicialPolytope& p, VertexSet u) {
  detail::require_even_dim(p);
  if (!is_face(p, u)) throw Error(ErrorCode::NotAFace, "universality is only defined for faces");
  if (u.size() == p.dim()) return true;
  Quotient q;
  try {
    q = quotient(p, u);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::QuotientNotPolytopal) return false;
    throw;
  }
  return q.polytope.num_vertices() == p.num_vertices() - u.size() && is_neighbourly(q.polytope);
}

/// All k-faces (k+1 vertices) of P, lexicographic.
inline std::vector<VertexSet> faces_of_dimension(const SimplicialPolytope& p, int k) {
  const auto set = detail::faces_of_size(p.facets(), k + 1);
  std::vector<VertexSet> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Brute-force list of the universal k-faces, k odd. `threads` splits the
/// candidate checks; the result does not depend on it.
inline std::vector<VertexSet> universal_faces(const SimplicialPolytope& p, int k, unsigned threads = 1) {
  detail::require_even_dim(p);
  if (p.dim() < 4 || k < 1 || k > p.dim() - 1 || k % 2 == 0) {
    throw Error(ErrorCode::BadDimension, "universal face lists need d >= 4 and odd 1 <= k <= d-1 (d=" +
                                             std::to_string(p.dim()) + ", k=" + std::to_string(k) + ")");
  }
  const std::vector<VertexSet> candidates = faces_of_dimension(p, k);
  std::vector<char> keep(candidates.size(), 0);
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, candidates.size()));
  auto run = [&](std::size_t begin) {
    for (std::size_t i = begin; i < candidates.size(); i += workers) keep[i] = is_universal_face(p, candidates[i]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(candidates[i]);
  }
  return out;
}

/// Missing faces of P relative to the face G (G empty: the absolute ones),
/// sorted by members.
inline std::vector<MissingFace> missing_faces(const SimplicialPolytope& p, VertexSet g = {}) {
  if (!is_face(p, g)) throw Error(ErrorCode::NotAFace, "missing faces are taken relative to a face");
  std::vector<VertexSet> link;
  for (VertexSet f : p.facets()) {
    if (g.subset_of(f)) link.push_back(f - g);
  }
  std::vector<MissingFace> out;
  for (VertexSet m : detail::minimal_nonfaces(link, p.vertices() - g)) out.push_back({m, g});
  return out;
}

/// Universality of a (2k-1)-face through the missing faces: |M ∩ U| <= k for
/// every absolute missing face M. Pass `absolute` to reuse a computed list.
inline bool universal_via_missing(const SimplicialPolytope& p, VertexSet u,
                                  const std::vector<MissingFace>* absolute = nullptr) {
  detail::require_even_dim(p);
  if (!is_face(p, u)) throw Error(ErrorCode::NotAFace, "universality is only defined for faces");
  if (u.size() % 2 != 0) {
    throw Error(ErrorCode::BadDimension, "missing-face criterion applies to odd-dimensional faces");
  }
  std::vector<MissingFace> own;
  if (absolute == nullptr) {
    own = missing_faces(p);
    absolute = &own;
  }
  const int k = u.size() / 2;
  return std::all_of(absolute->begin(), absolute->end(),
                     [&](const MissingFace& m) { return (m.members & u).size() <= k; });
}

}  // namespace sewkit
