#ifndef POSETCM_HOMOLOGY_HPP
#define POSETCM_HOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetcm/independence_complex.hpp"

namespace posetcm {

inline constexpr std::size_t default_max_homology_vertices = 20;

// Faces grouped by dimension: entry d+1 holds the d-dimensional faces, so
// entry 0 is {empty face}. Each group is lexicographically sorted.
std::vector<std::vector<VertexList>> faces_by_dimension(const SimplicialComplex& c,
                                                        std::size_t max_vertices = default_max_homology_vertices);

// Reduced Betti numbers over Q, dimensions -1..dim.
struct HomologyProfile {
  std::vector<std::size_t> betti;  // betti[i+1] is dimension i

  int top_dimension() const noexcept { return static_cast<int>(betti.size()) - 2; }
  std::size_t at(int dim) const;
};

HomologyProfile reduced_betti(const SimplicialComplex& c, std::size_t max_vertices = default_max_homology_vertices);

// {G : G disjoint from F, G u F in C}, on the same vertex labels.
// Throws Error{not_a_face}.
SimplicialComplex link_of(const SimplicialComplex& c, const VertexList& face);

struct LinkRow {
  VertexList face;
  int link_dimension = -1;
  HomologyProfile homology;
};

struct ReisnerResult {
  bool cohen_macaulay = true;
  // First failing (face, dimension) in face order.
  std::optional<std::pair<VertexList, int>> witness;
  // Every face's row when requested.
  std::vector<LinkRow> table;
};

// Reisner's criterion over Q: every link has vanishing reduced homology below
// its own dimension.
ReisnerResult reisner_cm(const SimplicialComplex& c, std::size_t max_vertices = default_max_homology_vertices,
                         bool keep_table = false);

}  // namespace posetcm

#endif
