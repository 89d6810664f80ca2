#include "posetcm/zero_divisor_graph.hpp"

#include <algorithm>

#include "posetcm/error.hpp"

namespace posetcm {

namespace {

void require_boolean(const Poset& p) {
  if (!is_boolean(p).boolean) throw Error(ErrorCode::not_boolean, "poset is not Boolean");
}

}  // namespace

std::optional<Vertex> ZdGraph::vertex_of(ElementId x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return std::nullopt;
  return static_cast<Vertex>(it - elements.begin());
}

ElementSet zero_divisors(const Poset& p) {
  const ElementId zero = p.require_bottom();
  ElementSet out;
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < p.size(); ++b) {
      if (b != zero && p.meet_is_bottom(a, b)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

ZdGraph zero_divisor_graph(const Poset& p) {
  const ElementId zero = p.require_bottom();
  const std::size_t n = p.size();

  // One pass over unordered pairs of nonzero elements.
  std::vector<std::pair<ElementId, ElementId>> pairs;
  Bitset is_vertex(n);
  for (ElementId a = 0; a < n; ++a) {
    if (a == zero) continue;
    for (ElementId b = a + 1; b < n; ++b) {
      if (b == zero) continue;
      if (p.meet_is_bottom(a, b)) {
        pairs.emplace_back(a, b);
        is_vertex.set(a);
        is_vertex.set(b);
      }
    }
  }

  ZdGraph g;
  g.owner = &p;
  g.elements = is_vertex.members();
  std::vector<std::string> names;
  for (ElementId x : g.elements) names.push_back(p.name(x));
  g.graph = Graph(std::move(names));
  for (auto [a, b] : pairs) g.graph.add_edge(*g.vertex_of(a), *g.vertex_of(b));
  return g;
}

VertexList graph_complements(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::unknown_vertex, "vertex out of range");
  VertexList out;
  const Bitset& nv = g.neighbors(v);
  for (std::size_t w = nv.find_first(); w != Bitset::npos; w = nv.find_next(w))
    if (!nv.intersects(g.neighbors(w))) out.push_back(w);
  return out;
}

VertexList ends(const Graph& g) {
  VertexList out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

LemmaReport check_unique_complementation(const Poset& p, const ZdGraph& g) {
  require_boolean(p);
  LemmaReport r;
  for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
    const ElementId x = g.element_of(v);
    const VertexList gc = graph_complements(g.graph, v);
    const ElementSet oc = complements_of(p, x);
    if (gc.size() != 1 || oc.size() != 1 || g.element_of(gc.front()) != oc.front()) {
      r.pass = false;
      r.violators.push_back(x);
    }
  }
  return r;
}

LemmaReport check_atom_end_lemma(const Poset& p, const ZdGraph& g) {
  require_boolean(p);
  LemmaReport r;
  const ElementId one = p.require_top();
  const VertexList end_list = ends(g.graph);
  for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
    const ElementId b = g.element_of(v);
    if (b == one) continue;
    const ElementSet comp = complements_of(p, b);
    bool ok = comp.size() == 1;
    if (ok) {
      const auto cv = g.vertex_of(comp.front());
      const bool is_atom = p.atom_bits().test(b);
      const bool end_adjacent = cv && g.graph.degree(*cv) == 1 && g.graph.adjacent(v, *cv);
      ok = is_atom == end_adjacent;
      if (ok && is_atom) {
        for (Vertex e : end_list)
          if (e != *cv && g.graph.adjacent(v, e)) ok = false;
      }
    }
    if (!ok) {
      r.pass = false;
      r.violators.push_back(b);
    }
  }
  return r;
}

namespace {

std::string quoted(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_dot(const ZdGraph& g) {
  std::string out = "graph zdg {\n";
  for (auto [a, b] : g.graph.edges())
    out += "  " + quoted(g.graph.name(a)) + " -- " + quoted(g.graph.name(b)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace posetcm
