#include "posetcm/independence_complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "posetcm/error.hpp"

namespace posetcm {

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> names,
                                                 std::vector<VertexList> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (Vertex v : f)
      if (v >= names.size()) throw Error(ErrorCode::unknown_vertex, "facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  std::vector<VertexList> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < facets.size() && !contained; ++j)
      contained = j != i && facets[j].size() > facets[i].size() &&
                  std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end());
    if (!contained) maximal.push_back(facets[i]);
  }
  return SimplicialComplex{std::move(names), std::move(maximal)};
}

int SimplicialComplex::dimension() const noexcept {
  std::size_t m = 0;
  for (const auto& f : facets) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

namespace {

using Mask = std::uint64_t;

// Bron-Kerbosch with Tomita pivoting on the complement graph.
class MisEnumerator {
public:
  explicit MisEnumerator(const Graph& g) : n_(g.vertex_count()), non_adj_(n_) {
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    for (Vertex v = 0; v < n_; ++v) {
      Mask adj = 0;
      const Bitset& row = g.neighbors(v);
      for (std::size_t w = row.find_first(); w != Bitset::npos; w = row.find_next(w)) adj |= Mask{1} << w;
      non_adj_[v] = all & ~adj & ~(Mask{1} << v);
    }
    all_ = all;
  }

  std::vector<VertexList> run() {
    expand(0, all_, 0);
    return std::move(out_);
  }

private:
  void expand(Mask r, Mask p, Mask x) {
    if (!p && !x) {
      VertexList f;
      for (Mask m = r; m; m &= m - 1) f.push_back(static_cast<Vertex>(std::countr_zero(m)));
      out_.push_back(std::move(f));
      return;
    }
    Vertex pivot = 0;
    int best = -1;
    for (Mask m = p | x; m; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      const int c = std::popcount(p & non_adj_[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Mask m = p & ~non_adj_[pivot]; m; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      const Mask bit = Mask{1} << v;
      expand(r | bit, p & non_adj_[v], x & non_adj_[v]);
      p &= ~bit;
      x |= bit;
    }
  }

  std::size_t n_;
  std::vector<Mask> non_adj_;
  Mask all_ = 0;
  std::vector<VertexList> out_;
};

}  // namespace

IndependenceComplex independence_complex(const Graph& g, std::size_t max_vertices) {
  const std::size_t cap = std::min(max_vertices, hard_max_vertices);
  if (g.vertex_count() > cap)
    throw Error(ErrorCode::size_limit_exceeded,
                "graph has " + std::to_string(g.vertex_count()) + " vertices, facet enumeration cap is " +
                    std::to_string(cap));
  std::vector<VertexList> facets = MisEnumerator(g).run();
  std::sort(facets.begin(), facets.end());
  return IndependenceComplex{g, SimplicialComplex{g.names(), std::move(facets)}};
}

bool is_well_covered(const IndependenceComplex& c) {
  const auto& f = c.facets();
  if (f.empty()) throw Error(ErrorCode::empty_complex, "complex has no facets");
  return std::all_of(f.begin(), f.end(), [&](const VertexList& s) { return s.size() == f.front().size(); });
}

bool is_very_well_covered(const IndependenceComplex& c) {
  if (!is_well_covered(c)) return false;
  for (Vertex v = 0; v < c.graph.vertex_count(); ++v)
    if (c.graph.degree(v) == 0) return false;
  return c.graph.vertex_count() == 2 * c.facets().front().size();
}

VertexList extend_independent(const Poset& p, const ZdGraph& g, const VertexList& seed) {
  if (!is_boolean(p).boolean) throw Error(ErrorCode::not_boolean, "poset is not Boolean");
  const Graph& gr = g.graph;
  for (Vertex v : seed)
    if (v >= gr.vertex_count()) throw Error(ErrorCode::unknown_vertex, "seed vertex out of range");
  if (!gr.is_independent(seed)) throw Error(ErrorCode::not_independent, "seed set is not independent");

  // Complementary pairs keyed by their smaller element id.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < gr.vertex_count(); ++v) {
    const ElementSet comp = complements_of(p, g.element_of(v));
    if (comp.size() != 1) contract_violation("Boolean element without a unique complement");
    const auto w = g.vertex_of(comp.front());
    if (!w) contract_violation("complement of a vertex is not a vertex");
    if (v < *w) pairs.emplace_back(v, *w);
  }

  Bitset in(gr.vertex_count());
  for (Vertex v : seed) in.set(v);
  auto addable = [&](Vertex v) { return !gr.neighbors(v).intersects(in); };

  for (auto [a, b] : pairs) {
    if (in.test(a) || in.test(b)) continue;
    const bool ok_a = addable(a), ok_b = addable(b);
    Vertex pick;
    if (ok_a && ok_b) {
      const std::size_t wa = weight(p, g.element_of(a)), wb = weight(p, g.element_of(b));
      pick = wa > wb ? a : (wb > wa ? b : std::min(a, b));
    } else if (ok_a) {
      pick = a;
    } else if (ok_b) {
      pick = b;
    } else {
      contract_violation("no member of an untouched complementary pair extends the set");
    }
    in.set(pick);
  }

  VertexList out = in.members();
  if (2 * out.size() != gr.vertex_count()) contract_violation("extension did not reach |V|/2");
  return out;
}

std::string EdgeIdealScript::render() const {
  const bool m2 = dialect == IdealDialect::m2;
  const std::string comment = m2 ? "-- " : "// ";
  std::string out;
  for (std::size_t k = 0; k < variables.size(); ++k) out += comment + variables[k] + " = " + vertex_names[k] + "\n";
  const std::string last = variables.empty() ? "v0" : variables.back();
  std::string gens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) gens += ", ";
    gens += variables[generators[i].first] + "*" + variables[generators[i].second];
  }
  if (m2) {
    out += "R = QQ[v0.." + last + "];\n";
    out += "I = monomialIdeal(" + (gens.empty() ? std::string("0_R") : gens) + ");\n";
  } else {
    out += "ring R = 0, (v0.." + last + "), dp;\n";
    out += "ideal I = " + (gens.empty() ? std::string("0") : gens) + ";\n";
  }
  return out;
}

EdgeIdealScript export_edge_ideal(const Graph& g, IdealDialect dialect) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::empty_graph, "graph has no vertices, so no variables");
  EdgeIdealScript s;
  s.dialect = dialect;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    s.variables.push_back("v" + std::to_string(v));
    s.vertex_names.push_back(g.name(v));
  }
  s.generators = g.edges();
  return s;
}

}  // namespace posetcm
