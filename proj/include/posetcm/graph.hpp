#ifndef POSETCM_GRAPH_HPP
#define POSETCM_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "posetcm/bitset.hpp"

namespace posetcm {

// Local vertex index 0..m-1.
using Vertex = std::size_t;
using VertexList = std::vector<Vertex>;

// Simple undirected graph with named vertices.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::vector<std::string> names);

  static Graph from_edges(std::vector<std::string> names,
                          const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept;
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  void add_edge(Vertex a, Vertex b);
  bool adjacent(Vertex a, Vertex b) const { return adj_[a].test(b); }
  const Bitset& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).count(); }

  // Sorted by (min, max).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_independent(const VertexList& s) const;
  bool is_maximal_independent(const VertexList& s) const;
  bool is_vertex_cover(const VertexList& s) const;
  bool is_minimal_vertex_cover(const VertexList& s) const;

private:
  std::vector<std::string> names_;
  std::vector<Bitset> adj_;
};

}  // namespace posetcm

#endif
