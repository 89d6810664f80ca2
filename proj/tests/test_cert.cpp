#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "posetcm/catalog.hpp"
#include "posetcm/cm_certificate.hpp"
#include "posetcm/error.hpp"
#include "posetcm/homology.hpp"
#include "posetcm/zero_divisor_graph.hpp"

using namespace posetcm;

namespace {

ElementId id(const Poset& p, std::string_view n) { return *p.find(n); }

std::vector<std::pair<std::string, std::string>> names(const ZdGraph& g, const PairList& pairs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [x, y] : pairs) out.emplace_back(g.graph.name(x), g.graph.name(y));
  return out;
}

Graph k22() { return Graph::from_edges({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("stratified facet of the four-atom Boolean poset") {
  const Poset p = atom_coatom(4);
  const Stratification s = boolean_facet(p);
  CHECK(s.k == 4);
  REQUIRE(s.strata.size() == 1);
  CHECK(s.strata[0].first == 1);
  CHECK(s.strata[0].second == ElementSet{id(p, "q1'"), id(p, "q2'"), id(p, "q3'"), id(p, "q4'")});
  CHECK(s.b_hat.empty());
  CHECK(s.facet == s.strata[0].second);
}

TEST_CASE("stratified facets of small power sets") {
  const Poset b3 = boolean_lattice(3);
  const Stratification s3 = boolean_facet(b3);
  CHECK(s3.k == 3);
  CHECK(s3.facet == ElementSet{id(b3, "{1,2}"), id(b3, "{1,3}"), id(b3, "{2,3}")});

  const Poset b4 = boolean_lattice(4);
  const Stratification s4 = boolean_facet(b4);
  CHECK(s4.facet.size() == 7);
  CHECK(s4.b_hat.size() == 3);
  for (ElementId x : s4.b_hat) CHECK(weight(b4, x) == 2);
  // b_hat keeps the smaller id of each complementary pair
  CHECK(s4.b_hat == ElementSet{id(b4, "{1,2}"), id(b4, "{1,3}"), id(b4, "{1,4}")});
}

TEST_CASE("stratified facet guards") {
  auto code = [](const Poset& p) {
    try {
      boolean_facet(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal_error;
  };
  CHECK(code(m_atoms(3)) == ErrorCode::not_boolean);
  CHECK(code(chain(2)) == ErrorCode::fewer_than_two_atoms);
}

TEST_CASE("Boolean labelings") {
  const Poset ac4 = atom_coatom(4);
  const ZdGraph g = zero_divisor_graph(ac4);
  const PairList l = boolean_labeling(ac4, g, boolean_facet(ac4, g));
  CHECK(names(g, l) == std::vector<std::pair<std::string, std::string>>{
                           {"q1", "q1'"}, {"q2", "q2'"}, {"q3", "q3'"}, {"q4", "q4'"}});

  const Poset b3 = boolean_lattice(3);
  const ZdGraph g3 = zero_divisor_graph(b3);
  for (auto [x, y] : boolean_labeling(b3, g3, boolean_facet(b3, g3))) {
    CHECK(weight(b3, g3.element_of(x)) == 1);
    CHECK(oracle::complements(b3, g3.element_of(y)) == ElementSet{g3.element_of(x)});
  }

  const Poset b2 = boolean_lattice(2);
  const ZdGraph g2 = zero_divisor_graph(b2);
  CHECK(boolean_labeling(b2, g2, boolean_facet(b2, g2)).size() == 1);
}

TEST_CASE("condition checks") {
  const Poset ac4 = atom_coatom(4);
  const ZdGraph g = zero_divisor_graph(ac4);
  const MyCertificate c = verify_my_conditions(g.graph, boolean_labeling(ac4, g, boolean_facet(ac4, g)));
  CHECK(c.all_pass());
  CHECK(c.h == 4);

  // K_{2,2}: both matchings in both orders fail (e) and only (e)
  const Graph k = k22();
  const PairList matchings[] = {{{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  for (PairList m : matchings) {
    for (int order = 0; order < 2; ++order) {
      const MyCertificate cert = verify_my_conditions(k, m);
      CHECK(cert.condition('a').pass);
      CHECK(cert.condition('b').pass);
      CHECK(cert.condition('c').pass);
      CHECK(cert.condition('d').pass);
      CHECK_FALSE(cert.condition('e').pass);
      std::swap(m[0], m[1]);
    }
  }

  const Graph k2 = Graph::from_edges({"a", "b"}, {{0, 1}});
  CHECK(verify_my_conditions(k2, {{0, 1}}).all_pass());

  try {
    verify_my_conditions(k, {{0, 2}});
    FAIL("expected PairsDontPartition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::pairs_dont_partition);
  }
}

TEST_CASE("condition failures carry witnesses") {
  // path a-b-c-d: y = {a,c} is not a facet complement of a matching on x = {b,d}
  const Graph p4 = Graph::from_edges({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  const MyCertificate bad_b = verify_my_conditions(p4, {{1, 3}, {2, 0}});
  CHECK_FALSE(bad_b.condition('b').pass);
  CHECK(bad_b.condition('b').witness == std::vector<std::string>{"b", "d"});
  const MyCertificate bad_a = verify_my_conditions(p4, {{0, 1}, {3, 2}});
  CHECK_FALSE(bad_a.condition('a').pass);
}

TEST_CASE("orderings") {
  const Poset b3 = boolean_lattice(3);
  const ZdGraph g = zero_divisor_graph(b3);
  PairList m;
  for (const char* a : {"{1}", "{2}", "{3}"}) {
    const ElementId x = id(b3, a);
    m.emplace_back(*g.vertex_of(x), *g.vertex_of(oracle::complements(b3, x).front()));
  }
  PairList reversed(m.rbegin(), m.rend());
  for (const PairList& input : {m, reversed}) {
    const OrderingResult r = find_ordering(g.graph, input);
    CHECK(r.feasible);
    CHECK(r.ordered == input);
  }

  const OrderingResult k = find_ordering(k22(), {{0, 2}, {1, 3}});
  CHECK_FALSE(k.feasible);
  CHECK(k.cycle == std::vector<std::size_t>{1, 2, 1});

  const Graph k2 = Graph::from_edges({"a", "b"}, {{0, 1}});
  const OrderingResult one = find_ordering(k2, {{0, 1}});
  CHECK(one.feasible);
  CHECK(one.ordered == PairList{{0, 1}});
}

TEST_CASE("order sensitivity is confined to the last condition") {
  const Poset ac4 = atom_coatom(5);
  const ZdGraph g = zero_divisor_graph(ac4);
  PairList l = boolean_labeling(ac4, g, boolean_facet(ac4, g));
  const MyCertificate base = verify_my_conditions(g.graph, l);
  std::sort(l.begin(), l.end());
  do {
    const MyCertificate c = verify_my_conditions(g.graph, l);
    for (char k : {'a', 'b', 'c', 'd'}) CHECK(c.condition(k).pass == base.condition(k).pass);
  } while (std::next_permutation(l.begin(), l.end()));
}

TEST_CASE("Cohen-Macaulay pipeline") {
  const CmResult ac4 = is_cohen_macaulay(atom_coatom(4));
  CHECK(ac4.verdict == CmVerdict::cm);
  CHECK(ac4.path == CmPath::boolean_certificate);
  REQUIRE(ac4.certificate.has_value());
  CHECK(ac4.certificate->all_pass());

  const std::size_t sizes[] = {3, 3, 3};
  const CmResult prod = is_cohen_macaulay(chain_product(sizes).carrier);
  CHECK(prod.verdict == CmVerdict::not_cm);
  CHECK(prod.path == CmPath::not_unmixed);

  const CmResult m3 = is_cohen_macaulay(m_atoms(3));
  CHECK(m3.verdict == CmVerdict::cm);
  CHECK(m3.path == CmPath::homology_oracle);

  const std::size_t two[] = {3, 3};
  const CmResult k = is_cohen_macaulay(chain_product(two).carrier);
  CHECK(k.verdict == CmVerdict::not_cm);
  CHECK(k.path == CmPath::matching_search);

  try {
    is_cohen_macaulay(chain(3));
    FAIL("expected EmptyGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_graph);
  }
}

TEST_CASE("node limit makes the search inconclusive") {
  // very well-covered but not Boolean, so the search runs
  const std::size_t two[] = {3, 3};
  CmConfig cfg;
  cfg.max_search_nodes = 1;
  const CmResult r = is_cohen_macaulay(chain_product(two).carrier, cfg);
  CHECK(r.verdict == CmVerdict::inconclusive);
}

TEST_CASE("certificate JSON") {
  const Graph k2 = Graph::from_edges({"a", "b"}, {{0, 1}});
  const std::string text = certificate_json(k2, verify_my_conditions(k2, {{0, 1}}));
  CHECK(text ==
        "{\n  \"h\": 1,\n  \"pairs\": [\n    {\n      \"index\": 1,\n      \"x\": \"a\",\n      \"y\": \"b\"\n    }\n  ],\n"
        "  \"conditions\": {\n    \"a\": {\n      \"pass\": true\n    },\n    \"b\": {\n      \"pass\": true\n    },\n"
        "    \"c\": {\n      \"pass\": true\n    },\n    \"d\": {\n      \"pass\": true\n    },\n"
        "    \"e\": {\n      \"pass\": true\n    }\n  },\n  \"valid\": true\n}\n");
  const auto j = nlohmann::json::parse(certificate_json(k22(), verify_my_conditions(k22(), {{0, 2}, {1, 3}})));
  CHECK(j["valid"] == false);
  CHECK(j["conditions"]["e"]["witness"] == nlohmann::json::array({"x2", "y1"}));
}

TEST_CASE("certificate route agrees with the homology oracle on small catalog posets") {
  std::vector<Poset> ps = {boolean_lattice(2), boolean_lattice(3), boolean_lattice(4), atom_coatom(3),
                           atom_coatom(4),     m_atoms(3),         m_atoms(4),         m_atoms(5)};
  for (std::vector<std::size_t> s : std::vector<std::vector<std::size_t>>{{2, 2}, {3, 3}, {2, 3}, {2, 2, 2}, {2, 2, 3}})
    ps.push_back(chain_product(s).carrier);
  for (const Poset& p : ps) {
    const ZdGraph g = zero_divisor_graph(p);
    if (g.graph.vertex_count() > 16) continue;
    const CmResult r = is_cohen_macaulay(p);
    REQUIRE(r.verdict != CmVerdict::inconclusive);
    const bool oracle = reisner_cm(independence_complex(g.graph).complex).cohen_macaulay;
    CHECK((r.verdict == CmVerdict::cm) == oracle);
  }
}
