#include "posetcm/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "posetcm/error.hpp"
#include "posetcm/exact_rank.hpp"

namespace posetcm {

namespace {

using FaceMask = std::uint32_t;
constexpr std::size_t mask_bits = 32;

void check_cap(const SimplicialComplex& c, std::size_t max_vertices) {
  const std::size_t cap = std::min(max_vertices, mask_bits);
  if (c.vertex_count() > cap)
    throw Error(ErrorCode::size_limit_exceeded,
                "complex has " + std::to_string(c.vertex_count()) + " vertices, homology cap is " +
                    std::to_string(cap));
}

FaceMask to_mask(const VertexList& f) {
  FaceMask m = 0;
  for (Vertex v : f) m |= FaceMask{1} << v;
  return m;
}

VertexList to_list(FaceMask m) {
  VertexList f;
  for (; m; m &= m - 1) f.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return f;
}

// Faces as masks, grouped by size and lexicographically ordered.
std::vector<std::vector<FaceMask>> face_masks(const SimplicialComplex& c) {
  std::unordered_set<FaceMask> all;
  for (const auto& f : c.facets) {
    const FaceMask top = to_mask(f);
    // every submask of the facet, including the empty face
    for (FaceMask s = top;; s = (s - 1) & top) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::vector<FaceMask>> by_size(static_cast<std::size_t>(c.dimension() + 2));
  for (FaceMask m : all) by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
  for (auto& group : by_size)
    std::sort(group.begin(), group.end(), [](FaceMask a, FaceMask b) {
      // equal sizes: the face holding the lowest differing vertex comes first
      const FaceMask diff = a ^ b;
      return diff != 0 && (a & diff & (~diff + 1)) != 0;
    });
  return by_size;
}

HomologyProfile betti_of(const std::vector<std::vector<FaceMask>>& faces) {
  HomologyProfile h;
  if (faces.empty()) return h;  // void complex
  const std::size_t groups = faces.size();  // sizes 0..groups-1

  std::vector<std::unordered_map<FaceMask, std::size_t>> index(groups);
  for (std::size_t s = 0; s < groups; ++s)
    for (std::size_t i = 0; i < faces[s].size(); ++i) index[s][faces[s][i]] = i;

  // rank of the boundary from faces of size s to size s-1; s = 0 maps to zero
  std::vector<std::size_t> rank(groups + 1, 0);
  for (std::size_t s = 1; s < groups; ++s) {
    SparseMatrix d;
    d.rows = faces[s - 1].size();
    d.columns.resize(faces[s].size());
    for (std::size_t col = 0; col < faces[s].size(); ++col) {
      const FaceMask f = faces[s][col];
      std::int64_t sign = 1;
      auto& column = d.columns[col];
      for (FaceMask m = f; m; m &= m - 1) {
        const FaceMask bit = m & (~m + 1);
        column.emplace_back(static_cast<std::uint32_t>(index[s - 1].at(f & ~bit)), sign);
        sign = -sign;
      }
      std::sort(column.begin(), column.end());
    }
    rank[s] = rank_sparse(d);
  }

  long long euler_faces = 0, euler_betti = 0;
  h.betti.resize(groups);
  for (std::size_t s = 0; s < groups; ++s) {
    const std::size_t f = faces[s].size();
    h.betti[s] = f - rank[s] - rank[s + 1];
    const long long sign = (s % 2 == 1) ? 1 : -1;  // dimension s-1
    euler_faces += sign * static_cast<long long>(f);
    euler_betti += sign * static_cast<long long>(h.betti[s]);
  }
  if (euler_faces != euler_betti) contract_violation("Euler characteristic mismatch");
  return h;
}

}  // namespace

std::size_t HomologyProfile::at(int dim) const {
  if (dim < -1 || dim > top_dimension()) return 0;
  return betti[static_cast<std::size_t>(dim + 1)];
}

std::vector<std::vector<VertexList>> faces_by_dimension(const SimplicialComplex& c, std::size_t max_vertices) {
  check_cap(c, max_vertices);
  std::vector<std::vector<VertexList>> out;
  for (const auto& group : face_masks(c)) {
    auto& dst = out.emplace_back();
    for (FaceMask m : group) dst.push_back(to_list(m));
  }
  return out;
}

HomologyProfile reduced_betti(const SimplicialComplex& c, std::size_t max_vertices) {
  check_cap(c, max_vertices);
  if (c.facets.empty()) return {};
  return betti_of(face_masks(c));
}

SimplicialComplex link_of(const SimplicialComplex& c, const VertexList& face) {
  VertexList f = face;
  std::sort(f.begin(), f.end());
  std::vector<VertexList> rest;
  for (const auto& g : c.facets) {
    if (!std::includes(g.begin(), g.end(), f.begin(), f.end())) continue;
    VertexList r;
    std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(r));
    rest.push_back(std::move(r));
  }
  if (rest.empty()) throw Error(ErrorCode::not_a_face, "set is not a face of the complex");
  return SimplicialComplex::from_facets(c.names, std::move(rest));
}

ReisnerResult reisner_cm(const SimplicialComplex& c, std::size_t max_vertices, bool keep_table) {
  check_cap(c, max_vertices);
  ReisnerResult r;
  if (c.facets.empty()) return r;
  for (const auto& group : face_masks(c)) {
    for (FaceMask m : group) {
      const VertexList face = to_list(m);
      const SimplicialComplex link = link_of(c, face);
      const int d = link.dimension();
      HomologyProfile h = betti_of(face_masks(link));
      if (r.cohen_macaulay) {
        for (int i = -1; i < d; ++i) {
          if (h.at(i) != 0) {
            r.cohen_macaulay = false;
            r.witness = std::make_pair(face, i);
            break;
          }
        }
      }
      if (keep_table) r.table.push_back(LinkRow{face, d, std::move(h)});
      else if (!r.cohen_macaulay) return r;
    }
  }
  return r;
}

}  // namespace posetcm
