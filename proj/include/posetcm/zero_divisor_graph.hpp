#ifndef POSETCM_ZERO_DIVISOR_GRAPH_HPP
#define POSETCM_ZERO_DIVISOR_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "posetcm/graph.hpp"
#include "posetcm/poset.hpp"

namespace posetcm {

// Zero-divisor graph of a poset with 0: vertices are the nonzero zero-divisors,
// a ~ b iff {a,b}^l = {0}. Vertex i is the i-th smallest element id. The owner
// poset must outlive the graph.
struct ZdGraph {
  const Poset* owner = nullptr;
  std::vector<ElementId> elements;  // vertex -> element id, ascending
  Graph graph;

  std::optional<Vertex> vertex_of(ElementId x) const;
  ElementId element_of(Vertex v) const { return elements.at(v); }
};

// Z(P) including 0 itself whenever |P| >= 2. Throws Error{no_bottom}.
ElementSet zero_divisors(const Poset& p);

ZdGraph zero_divisor_graph(const Poset& p);

// All w with v ~ w and no common neighbour (edge v-w in no triangle).
VertexList graph_complements(const Graph& g, Vertex v);

// Degree-one vertices.
VertexList ends(const Graph& g);

struct LemmaReport {
  bool pass = true;
  std::vector<ElementId> violators;
};

// Boolean P: every vertex has exactly one graph complement and it is the
// order-theoretic complement. Throws Error{not_boolean}.
LemmaReport check_unique_complementation(const Poset& p, const ZdGraph& g);

// Boolean P: a vertex b is an atom iff its complement b' is an end adjacent to
// b, and then b' is the only end adjacent to b. Throws Error{not_boolean}.
LemmaReport check_atom_end_lemma(const Poset& p, const ZdGraph& g);

// `graph zdg { ... }`, one edge per line, sorted by (min id, max id).
std::string to_dot(const ZdGraph& g);

}  // namespace posetcm

#endif
