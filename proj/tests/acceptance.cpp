// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or exceeds its time budget.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "posetcm/catalog.hpp"
#include "posetcm/cm_certificate.hpp"
#include "posetcm/homology.hpp"
#include "posetcm/independence_complex.hpp"
#include "posetcm/product.hpp"
#include "posetcm/zero_divisor_graph.hpp"

using namespace posetcm;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> names_of(const ZdGraph& g, const VertexList& f) {
  std::vector<std::string> out;
  for (Vertex v : f) out.push_back(g.graph.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poset> criterion2_list() {
  std::vector<Poset> v;
  for (std::size_t n = 2; n <= 5; ++n) v.push_back(boolean_lattice(n));
  for (std::size_t k = 3; k <= 6; ++k) v.push_back(atom_coatom(k));
  return v;
}

std::unique_ptr<ProductAnalysis> chains(const std::vector<std::size_t>& sizes) {
  std::vector<Poset> f;
  for (std::size_t s : sizes) f.push_back(chain(s));
  return validate_factors(std::move(f));
}

void four_atoms() {
  const Poset p = parse_poset(slurp(std::string(POSETCM_TEST_DATA) + "/four_atoms.poset"));
  const ZdGraph g = zero_divisor_graph(p);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : g.graph.edges()) {
    std::string x = g.graph.name(a), y = g.graph.name(b);
    if (y < x) std::swap(x, y);
    edges.emplace_back(x, y);
  }
  std::sort(edges.begin(), edges.end());
  const std::vector<std::pair<std::string, std::string>> want = {
      {"q1", "q1'"}, {"q1", "q2"}, {"q1", "q3"}, {"q1", "q4"}, {"q2", "q2'"},
      {"q2", "q3"},  {"q2", "q4"}, {"q3", "q3'"}, {"q3", "q4"}, {"q4", "q4'"}};
  expect(edges == want, "edge list differs from K4 plus four pendants");
  std::vector<std::vector<std::string>> facets;
  const IndependenceComplex c = independence_complex(g.graph);
  for (const auto& f : c.facets()) facets.push_back(names_of(g, f));
  std::sort(facets.begin(), facets.end());
  std::vector<std::vector<std::string>> expected = {{"q1", "q2'", "q3'", "q4'"},
                                                    {"q1'", "q2", "q3'", "q4'"},
                                                    {"q1'", "q2'", "q3", "q4'"},
                                                    {"q1'", "q2'", "q3'", "q4"},
                                                    {"q1'", "q2'", "q3'", "q4'"}};
  std::sort(expected.begin(), expected.end());
  expect(facets == expected, "facet list differs");
}

void well_covered_catalog() {
  for (const Poset& p : criterion2_list()) {
    const ZdGraph g = zero_divisor_graph(p);
    const IndependenceComplex c = independence_complex(g.graph);
    expect(is_well_covered(c), "not well-covered");
    expect(is_very_well_covered(c), "not very well-covered");
    for (const auto& f : c.facets()) expect(2 * f.size() == g.graph.vertex_count(), "facet size is not |V|/2");
  }
}

void constructive_pipeline() {
  for (const Poset& p : criterion2_list()) {
    const ZdGraph g = zero_divisor_graph(p);
    const PairList labels = boolean_labeling(p, g, boolean_facet(p, g));
    const OrderingResult o = find_ordering(g.graph, labels);
    expect(o.feasible, "no ordering");
    expect(verify_my_conditions(g.graph, o.ordered).all_pass(), "a condition fails");
  }
}

void oracle_agreement() {
  std::vector<Poset> yes;
  for (std::size_t n = 2; n <= 4; ++n) yes.push_back(boolean_lattice(n));
  yes.push_back(atom_coatom(4));
  yes.push_back(m_atoms(3));
  for (const Poset& p : yes) {
    const CmResult my = is_cohen_macaulay(p);
    const ZdGraph g = zero_divisor_graph(p);
    const ReisnerResult r = reisner_cm(independence_complex(g.graph).complex);
    expect(my.verdict == CmVerdict::cm && r.cohen_macaulay, "CM poset not confirmed");
  }
  const auto k22 = chains({3, 3});
  const Poset& p = k22->carrier();
  const ZdGraph g = zero_divisor_graph(p);
  const IndependenceComplex c = independence_complex(g.graph);
  const CmResult my = is_cohen_macaulay(p);
  expect(my.verdict == CmVerdict::not_cm, "K_{2,2} not rejected");
  // any perfect matching of K_{2,2} leaves an ordering cycle
  bool any_feasible = false;
  for (const auto& f : c.facets()) {
    PairList m;
    for (Vertex x : f)
      for (Vertex y = 0; y < g.graph.vertex_count(); ++y)
        if (g.graph.adjacent(x, y) && std::find(f.begin(), f.end(), y) == f.end() &&
            std::none_of(m.begin(), m.end(), [&](const LabeledPair& q) { return q.second == y; })) {
          m.emplace_back(x, y);
          break;
        }
    if (m.size() * 2 == g.graph.vertex_count()) any_feasible = any_feasible || find_ordering(g.graph, m).feasible;
  }
  expect(!any_feasible, "an ordering exists for K_{2,2}");
  const ReisnerResult r = reisner_cm(c.complex);
  expect(!r.cohen_macaulay && r.witness && r.witness->first.empty() && r.witness->second == 0,
         "Reisner witness is not (empty face, 0)");
}

void counting() {
  const auto a = chains({3, 3, 3});
  expect(j_single(*a, 1).size() == 10 && oracle::j_single_formula({3, 3, 3}, 0) == 10, "|J_1| != 10");
  expect(j_triple(*a, 1, 2, 3).size() == 12 && oracle::j_triple_formula(3, 3) == 12, "|J_{1,2,3}| != 12");
  expect(!well_covered_verdict(*a).well_covered, "3,3,3 reported well-covered");
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto b = chains(std::vector<std::size_t>(n, 2));
    const std::size_t t = j_triple(*b, 1, 2, 3).size();
    for (std::size_t i = 1; i <= n; ++i) expect(j_single(*b, i).size() == t, "single and triple counts differ");
    expect(static_cast<long long>(t) == oracle::j_triple_formula(2, static_cast<long long>(n)), "triple formula");
    expect(well_covered_verdict(*b).well_covered, "2^n product not well-covered");
  }
}

void equivalence_sweep() {
  int instances = 0;
  for (std::size_t x = 2; x <= 4; ++x)
    for (std::size_t y = x; y <= 4; ++y)
      for (std::size_t z = y; z <= 4; ++z) {
        if (x * y * z > 64) continue;
        const EquivalenceReport r = equivalence_suite(*chains({x, y, z}));
        const bool want = z == 2;
        for (const auto& s : r.statements) expect(s.has_value() && *s == want, "statement not constant");
        expect(r.consistent, "inconsistent report");
        ++instances;
      }
  expect(instances == 10, "unexpected instance count");
}

void property_suites() {
  const std::string cmd = std::string("'") + POSETCM_PROPERTY_TESTS + "' > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "property suite failures");
}

bool run(int n, const std::string& title, double budget_s, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    body();
  } catch (const Failure& f) {
    ok = false;
    detail = f.what;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && s >= budget_s) {
    ok = false;
    detail = "over time budget";
  }
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", n, title.c_str(), s,
              detail.empty() ? "" : ": ", detail.c_str());
  return ok;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "four-atom Boolean poset graph and facets", 1, four_atoms);
  ok &= run(2, "Boolean catalog is very well-covered", 30, well_covered_catalog);
  ok &= run(3, "constructive certificate passes all conditions", 30, constructive_pipeline);
  ok &= run(4, "Reisner agrees with the certificate path", 60, oracle_agreement);
  ok &= run(5, "product counting formulas", 10, counting);
  ok &= run(6, "equivalence sweep over chain products", 60, equivalence_sweep);
  ok &= run(7, "property suites", 120, property_suites);
  return ok ? 0 : 1;
}
