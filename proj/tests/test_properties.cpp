// Randomized property suites. Every generator draws from one std::mt19937
// seeded by POSETCM_SEED (default below) so failures replay exactly.
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "posetcm/catalog.hpp"
#include "posetcm/cm_certificate.hpp"
#include "posetcm/exact_rank.hpp"
#include "posetcm/homology.hpp"
#include "posetcm/independence_complex.hpp"
#include "posetcm/product.hpp"
#include "posetcm/zero_divisor_graph.hpp"

using namespace posetcm;

namespace {

constexpr int cases = 1000;

std::uint32_t seed() {
  if (const char* s = std::getenv("POSETCM_SEED")) return static_cast<std::uint32_t>(std::strtoul(s, nullptr, 10));
  return 20261019u;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t salt) : gen(seed() ^ (salt * 0x9e3779b9u)) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen); }
  bool coin(double p) { return std::bernoulli_distribution(p)(gen); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
};

// Random poset: a random DAG on up to 8 inner elements (edges only from lower
// to higher index, so always acyclic), optionally with a bottom and a top.
Poset random_poset(Rng& r, bool bounded) {
  const std::size_t n = 1 + r.below(8);
  const double p = 0.1 + 0.4 * r.coin(0.5);
  std::vector<std::string> names;
  std::vector<std::pair<ElementId, ElementId>> le;
  const bool with_bottom = bounded || r.coin(0.7), with_top = bounded || r.coin(0.7);
  if (with_bottom) names.push_back("0");
  const std::size_t first = names.size();
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.coin(p)) le.emplace_back(first + i, first + j);
  if (with_bottom)
    for (std::size_t i = 0; i < n; ++i) le.emplace_back(0, first + i);
  if (with_top) {
    names.push_back("1");
    for (std::size_t i = 0; i < n; ++i) le.emplace_back(first + i, names.size() - 1);
    if (with_bottom) le.emplace_back(0, names.size() - 1);
  }
  return Poset::from_relation(names, le);
}

const std::vector<Poset>& catalog() {
  static const std::vector<Poset> all = [] {
    std::vector<Poset> v;
    for (std::size_t n = 1; n <= 5; ++n) v.push_back(boolean_lattice(n));
    for (std::size_t k = 1; k <= 5; ++k) v.push_back(chain(k));
    for (std::size_t k = 2; k <= 6; ++k) v.push_back(atom_coatom(k));
    for (std::size_t k = 1; k <= 5; ++k) v.push_back(m_atoms(k));
    for (std::vector<std::size_t> s : std::vector<std::vector<std::size_t>>{{2, 3}, {3, 3}, {2, 2, 3}, {3, 3, 3}})
      v.push_back(chain_product(s).carrier);
    return v;
  }();
  return all;
}

// Boolean catalog posets with at least two atoms.
const std::vector<Poset>& boolean_catalog() {
  static const std::vector<Poset> all = [] {
    std::vector<Poset> v;
    for (std::size_t n = 2; n <= 5; ++n) v.push_back(boolean_lattice(n));
    for (std::size_t k = 3; k <= 6; ++k) v.push_back(atom_coatom(k));
    for (std::size_t n = 2; n <= 4; ++n) v.push_back(chain_product(std::vector<std::size_t>(n, 2)).carrier);
    return v;
  }();
  return all;
}

ElementSet random_subset(Rng& r, std::size_t n, double p) {
  ElementSet s;
  for (ElementId x = 0; x < n; ++x)
    if (r.coin(p)) s.push_back(x);
  return s;
}

bool subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Graph random_graph(Rng& r, std::size_t n) {
  const double p = 0.1 + 0.8 * std::uniform_real_distribution<double>(0, 1)(r.gen);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (r.coin(p)) e.emplace_back(i, j);
  return Graph::from_edges(names, e);
}

}  // namespace

TEST_CASE("cone Galois laws") {
  Rng r(1);
  for (int c = 0; c < cases; ++c) {
    const Poset p = r.coin(0.5) ? r.pick(catalog()) : random_poset(r, false);
    const ElementSet b = random_subset(r, p.size(), 0.3);
    ElementSet a;
    for (ElementId x : b)
      if (r.coin(0.5)) a.push_back(x);
    const ElementSet au = upper_cone(p, a), bu = upper_cone(p, b);
    CHECK(au == oracle::upper(p, a));
    CHECK(lower_cone(p, a) == oracle::lower(p, a));
    const ElementSet aul = lower_cone(p, au);
    CHECK(subset(a, aul));
    CHECK(upper_cone(p, aul) == au);
    CHECK(subset(bu, au));
    const ElementSet al = lower_cone(p, a);
    CHECK(subset(a, upper_cone(p, al)));
    CHECK(lower_cone(p, upper_cone(p, al)) == al);
  }
}

TEST_CASE("Boolean catalog posets are uniquely complemented") {
  Rng r(2);
  for (int c = 0; c < cases; ++c) {
    const Poset& p = r.pick(boolean_catalog());
    const ElementId x = r.below(p.size());
    const ElementSet comp = complements_of(p, x);
    REQUIRE(comp.size() == 1);
    CHECK(comp == oracle::complements(p, x));
    CHECK(pseudocomplement_of(p, x) == comp.front());
  }
}

TEST_CASE("weights of complements sum to the poset weight") {
  Rng r(3);
  for (int c = 0; c < cases; ++c) {
    const Poset& p = r.pick(boolean_catalog());
    const ElementId x = r.below(p.size());
    const ElementId xc = complements_of(p, x).front();
    CHECK(weight(p, x) + weight(p, xc) == poset_weight(p));
    CHECK(weight(p, x) == oracle::weight(p, x));
  }
}

TEST_CASE("weight is strictly monotone on Boolean posets") {
  Rng r(4);
  int checked = 0;
  while (checked < cases) {
    const Poset& p = r.pick(boolean_catalog());
    const ElementId a = r.below(p.size()), b = r.below(p.size());
    if (!p.less(a, b)) continue;
    CHECK(weight(p, a) < weight(p, b));
    ++checked;
  }
}

TEST_CASE("adjacent vertices with complementary weights are complements") {
  Rng r(5);
  std::vector<ZdGraph> graphs;
  for (const Poset& p : boolean_catalog()) graphs.push_back(zero_divisor_graph(p));
  int premise = 0;
  for (int attempt = 0; premise < cases && attempt < 50 * cases; ++attempt) {
    const std::size_t k = r.below(graphs.size());
    const Poset& p = boolean_catalog()[k];
    const ZdGraph& g = graphs[k];
    const auto edges = g.graph.edges();
    const auto [v, w] = edges[r.below(edges.size())];
    const ElementId x = g.element_of(v), y = g.element_of(w);
    if (weight(p, x) + weight(p, y) != poset_weight(p)) continue;
    ++premise;
    CHECK(complements_of(p, x) == ElementSet{y});
  }
  CHECK(premise == cases);
}

TEST_CASE("complement edges lie in no triangle") {
  Rng r(6);
  std::vector<ZdGraph> graphs;
  for (const Poset& p : boolean_catalog()) graphs.push_back(zero_divisor_graph(p));
  for (int c = 0; c < cases; ++c) {
    const std::size_t k = r.below(graphs.size());
    const Poset& p = boolean_catalog()[k];
    const ZdGraph& g = graphs[k];
    const Vertex v = r.below(g.graph.vertex_count());
    const Vertex w = *g.vertex_of(complements_of(p, g.element_of(v)).front());
    CHECK(g.graph.adjacent(v, w));
    CHECK_FALSE(g.graph.neighbors(v).intersects(g.graph.neighbors(w)));
    CHECK(graph_complements(g.graph, v) == VertexList{w});
  }
}

TEST_CASE("extend_independent reaches half the vertices from any seed") {
  Rng r(7);
  std::vector<ZdGraph> graphs;
  for (const Poset& p : boolean_catalog()) graphs.push_back(zero_divisor_graph(p));
  for (int c = 0; c < cases; ++c) {
    const std::size_t k = r.below(graphs.size());
    const Poset& p = boolean_catalog()[k];
    const ZdGraph& g = graphs[k];
    const std::size_t m = g.graph.vertex_count();
    VertexList order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), r.gen);
    VertexList seed;
    const std::size_t want = r.below(m / 2 + 1);
    for (Vertex v : order) {
      if (seed.size() >= want) break;
      bool free = true;
      for (Vertex s : seed) free = free && !g.graph.adjacent(v, s);
      if (free) seed.push_back(v);
    }
    std::sort(seed.begin(), seed.end());
    const VertexList f = extend_independent(p, g, seed);
    CHECK(f.size() * 2 == m);
    CHECK(g.graph.is_maximal_independent(f));
    CHECK(std::includes(f.begin(), f.end(), seed.begin(), seed.end()));
  }
}

TEST_CASE("facet enumeration matches subset brute force") {
  Rng r(8);
  for (int c = 0; c < cases; ++c) {
    const Graph g = random_graph(r, 1 + r.below(16));
    const IndependenceComplex ic = independence_complex(g);
    CHECK(ic.facets() == oracle::facets_by_subsets(g));
  }
  // zero-divisor graphs of random bounded posets as well
  for (int c = 0; c < 200; ++c) {
    const Poset p = random_poset(r, true);
    const ZdGraph g = zero_divisor_graph(p);
    CHECK(g.graph.edges() == oracle::zd_graph(p).edges());
    if (g.graph.vertex_count() == 0) continue;
    CHECK(independence_complex(g.graph).facets() == oracle::facets_by_subsets(g.graph));
  }
}

TEST_CASE("Betti numbers are invariant under vertex relabeling") {
  Rng r(9);
  for (int c = 0; c < cases; ++c) {
    const std::size_t n = 1 + r.below(10);
    const Graph g = random_graph(r, n);
    const SimplicialComplex cx = independence_complex(g).complex;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), r.gen);
    std::vector<VertexList> moved;
    for (const auto& f : cx.facets) {
      VertexList m;
      for (Vertex v : f) m.push_back(perm[v]);
      moved.push_back(m);
    }
    const SimplicialComplex relabeled = SimplicialComplex::from_facets(cx.names, moved);
    const HomologyProfile h = reduced_betti(cx);
    CHECK(h.betti == reduced_betti(relabeled).betti);
    if (c % 10 == 0) CHECK(h.betti == oracle::betti(cx.facets));
  }
}

TEST_CASE("rank is independent of the elimination order") {
  Rng r(10);
  for (int c = 0; c < cases; ++c) {
    const std::size_t rows = 1 + r.below(9), cols = 1 + r.below(9);
    IntMatrix m(rows, cols);
    SparseMatrix s;
    s.rows = rows;
    s.columns.resize(cols);
    // low-rank products are common so rank deficiency gets exercised
    const bool low = r.coin(0.5);
    const std::size_t inner = 1 + r.below(3);
    std::vector<std::vector<int>> u(rows, std::vector<int>(inner)), v(inner, std::vector<int>(cols));
    for (auto& row : u)
      for (int& x : row) x = static_cast<int>(r.below(7)) - 3;
    for (auto& row : v)
      for (int& x : row) x = static_cast<int>(r.below(7)) - 3;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        std::int64_t x = 0;
        if (low) {
          for (std::size_t k = 0; k < inner; ++k) x += u[i][k] * v[k][j];
        } else if (r.coin(0.4)) {
          x = static_cast<std::int64_t>(r.below(9)) - 4;
        }
        m(i, j) = x;
        if (x != 0) s.columns[j].emplace_back(static_cast<std::uint32_t>(i), x);
      }
    const std::size_t expected = oracle::rational_rank(m);
    CHECK(rank_fraction_free(m) == expected);
    CHECK(rank_sparse(s) == expected);
    // permuted rows and columns
    std::vector<std::size_t> pr(rows), pc(cols);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), r.gen);
    std::shuffle(pc.begin(), pc.end(), r.gen);
    IntMatrix q(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) q(pr[i], pc[j]) = m(i, j);
    CHECK(rank_fraction_free(q) == expected);
  }
}

TEST_CASE("structural implications on random posets") {
  Rng r(11);
  for (int c = 0; c < cases; ++c) {
    const Poset p = random_poset(r, true);
    const bool ssc = is_ssc(p), wssc = is_wssc(p);
    if (ssc) CHECK(wssc);
    const bool boolean = is_boolean(p).boolean;
    if (boolean) CHECK(ssc);
    bool unique = true;
    for (ElementId x = 0; x < p.size() && unique; ++x) unique = complements_of(p, x).size() == 1;
    if (unique) CHECK(wssc);
    if (boolean && p.atom_bits().count() >= 2) {
      // every non-bound element is a vertex of the graph
      CHECK(zero_divisor_graph(p).elements.size() + 2 == p.size());
    }
  }
}

TEST_CASE("certificates imply well-covered and agree with the oracle") {
  Rng r(12);
  int with_graph = 0;
  for (int c = 0; c < cases; ++c) {
    const Poset p = random_poset(r, true);
    const ZdGraph g = zero_divisor_graph(p);
    if (g.graph.vertex_count() == 0 || g.graph.vertex_count() > 16) continue;
    ++with_graph;
    const IndependenceComplex ic = independence_complex(g.graph);
    const CmResult cm = is_cohen_macaulay(p);
    if (cm.certificate && cm.certificate->all_pass()) CHECK(is_well_covered(ic));
    const ReisnerResult rr = reisner_cm(ic.complex);
    if (rr.cohen_macaulay) CHECK(is_well_covered(ic));
    if (cm.verdict != CmVerdict::inconclusive) CHECK((cm.verdict == CmVerdict::cm) == rr.cohen_macaulay);
  }
  CHECK(with_graph > 100);
}

TEST_CASE("product identities") {
  // every ascending size vector with n >= 3 and at most 4096 elements
  std::vector<std::vector<std::size_t>> all;
  std::function<void(std::vector<std::size_t>&, std::size_t)> grow = [&](std::vector<std::size_t>& v, std::size_t prod) {
    if (v.size() >= 3) all.push_back(v);
    for (std::size_t s = v.empty() ? 2 : v.back(); prod * s <= 4096; ++s) {
      v.push_back(s);
      grow(v, prod * s);
      v.pop_back();
    }
  };
  std::vector<std::size_t> v;
  grow(v, 1);
  int enumerated = 0;
  for (const auto& sizes : all) {
    std::size_t elements = 1, dense = 1;
    for (std::size_t s : sizes) {
      elements *= s;
      dense *= s - 1;
    }
    if (elements - dense - 1 > default_max_vertices) continue;  // facet enumeration cap
    std::vector<Poset> f;
    for (std::size_t s : sizes) f.push_back(chain(s));
    const auto a = validate_factors(std::move(f));
    CHECK(a->dense().size() == dense);
    const WellCoveredVerdict w = well_covered_verdict(*a);
    REQUIRE(w.enumerated.has_value());
    CHECK(w.well_covered == *w.enumerated);
    CHECK(w.well_covered == (sizes.back() == 2));
    ++enumerated;
  }
  CHECK(enumerated >= 5);
}
