#include "posetcm/graph.hpp"

#include "posetcm/error.hpp"

namespace posetcm {

Graph::Graph(std::vector<std::string> names)
    : names_(std::move(names)), adj_(names_.size(), Bitset(names_.size())) {}

Graph Graph::from_edges(std::vector<std::string> names,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(std::move(names));
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a >= vertex_count() || b >= vertex_count())
    throw Error(ErrorCode::unknown_vertex, "edge endpoint out of range");
  if (a == b) throw Error(ErrorCode::invalid_argument, "self-loops are not allowed");
  adj_[a].set(b);
  adj_[b].set(a);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < vertex_count(); ++a)
    for (std::size_t b = adj_[a].find_next(a); b != Bitset::npos; b = adj_[a].find_next(b))
      out.emplace_back(a, b);
  return out;
}

bool Graph::is_independent(const VertexList& s) const {
  Bitset in(vertex_count());
  for (Vertex v : s) in.set(v);
  for (Vertex v : s)
    if (adj_[v].intersects(in)) return false;
  return true;
}

bool Graph::is_maximal_independent(const VertexList& s) const {
  if (!is_independent(s)) return false;
  Bitset in(vertex_count());
  for (Vertex v : s) in.set(v);
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (!in.test(v) && !adj_[v].intersects(in)) return false;
  return true;
}

bool Graph::is_vertex_cover(const VertexList& s) const {
  Bitset in(vertex_count());
  for (Vertex v : s) in.set(v);
  for (auto [a, b] : edges())
    if (!in.test(a) && !in.test(b)) return false;
  return true;
}

bool Graph::is_minimal_vertex_cover(const VertexList& s) const {
  if (!is_vertex_cover(s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    VertexList smaller;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) smaller.push_back(s[j]);
    if (is_vertex_cover(smaller)) return false;
  }
  return true;
}

}  // namespace posetcm
