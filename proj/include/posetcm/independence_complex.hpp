#ifndef POSETCM_INDEPENDENCE_COMPLEX_HPP
#define POSETCM_INDEPENDENCE_COMPLEX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "posetcm/graph.hpp"
#include "posetcm/poset.hpp"
#include "posetcm/zero_divisor_graph.hpp"

namespace posetcm {

inline constexpr std::size_t default_max_vertices = 40;
// Facet enumeration works on 64-bit vertex masks.
inline constexpr std::size_t hard_max_vertices = 64;

// Simplicial complex given by its facets. Canonical form: every facet sorted
// ascending, no facet contained in another, facets in lexicographic order.
struct SimplicialComplex {
  std::vector<std::string> names;  // vertex labels
  std::vector<VertexList> facets;

  // Normalizes `facets` into canonical form.
  static SimplicialComplex from_facets(std::vector<std::string> names, std::vector<VertexList> facets);

  std::size_t vertex_count() const noexcept { return names.size(); }
  // max facet size - 1; -1 for the complex {empty face}
  int dimension() const noexcept;
};

struct IndependenceComplex {
  Graph graph;
  SimplicialComplex complex;

  const std::vector<VertexList>& facets() const noexcept { return complex.facets; }
  int dimension() const noexcept { return complex.dimension(); }
};

// All maximal independent sets. Throws Error{size_limit_exceeded} when the
// graph has more than `max_vertices` vertices.
IndependenceComplex independence_complex(const Graph& g, std::size_t max_vertices = default_max_vertices);

// Throws Error{empty_complex} for an empty facet list.
bool is_well_covered(const IndependenceComplex& c);
bool is_very_well_covered(const IndependenceComplex& c);

// Grows an independent set of Γ(P), P Boolean, by one member of each
// untouched complementary pair. Result is sorted and has |V|/2 vertices.
// Throws Error{not_boolean, not_independent}.
VertexList extend_independent(const Poset& p, const ZdGraph& g, const VertexList& seed);

enum class IdealDialect { m2, singular };

struct EdgeIdealScript {
  std::vector<std::string> variables;      // v<k> for vertex k
  std::vector<std::string> vertex_names;   // element name of vertex k
  std::vector<std::pair<Vertex, Vertex>> generators;  // sorted, i < j
  IdealDialect dialect = IdealDialect::m2;

  std::string render() const;
};

// Throws Error{empty_graph} when the graph has no vertices.
EdgeIdealScript export_edge_ideal(const Graph& g, IdealDialect dialect);

}  // namespace posetcm

#endif
