#include "posetcm/cm_certificate.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include <json.hpp>

#include "posetcm/error.hpp"

namespace posetcm {

bool MyCertificate::all_pass() const noexcept {
  return std::all_of(conditions.begin(), conditions.end(), [](const ConditionStatus& c) { return c.pass; });
}

// ---- verification ---------------------------------------------------------

namespace {

void fail(ConditionStatus& s, std::vector<std::string> witness) {
  if (!s.pass) return;  // keep the first witness
  s.pass = false;
  s.witness = std::move(witness);
}

void check_partition(const Graph& g, const PairList& pairs) {
  if (g.vertex_count() != 2 * pairs.size())
    throw Error(ErrorCode::pairs_dont_partition,
                "graph has " + std::to_string(g.vertex_count()) + " vertices but " +
                    std::to_string(pairs.size()) + " pairs were given");
  std::vector<bool> seen(g.vertex_count(), false);
  for (auto [x, y] : pairs) {
    for (Vertex v : {x, y}) {
      if (v >= g.vertex_count() || seen[v])
        throw Error(ErrorCode::pairs_dont_partition, "pairs do not partition the vertex set");
      seen[v] = true;
    }
  }
}

// Conditions (c) and (d); they do not depend on the order of the pairs.
void check_c(const Graph& g, const PairList& pairs, ConditionStatus& c) {
  const std::size_t h = pairs.size();
  for (std::size_t i = 0; i < h && c.pass; ++i)
    for (Vertex z : {pairs[i].first, pairs[i].second})
      for (std::size_t j = 0; j < h && c.pass; ++j) {
        if (j == i || !g.adjacent(z, pairs[j].first)) continue;
        for (std::size_t k = 0; k < h; ++k) {
          if (k == i || k == j) continue;
          if (g.adjacent(pairs[j].second, pairs[k].first) && !g.adjacent(z, pairs[k].first)) {
            fail(c, {g.name(z), g.name(pairs[j].first), g.name(pairs[j].second), g.name(pairs[k].first)});
            break;
          }
        }
      }
}

void check_d(const Graph& g, const PairList& pairs, ConditionStatus& d) {
  for (std::size_t i = 0; i < pairs.size() && d.pass; ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (g.adjacent(pairs[i].first, pairs[j].second) && i != j && g.adjacent(pairs[i].first, pairs[j].first)) {
        fail(d, {g.name(pairs[i].first), g.name(pairs[j].second), g.name(pairs[j].first)});
        break;
      }
}

}  // namespace

MyCertificate verify_my_conditions(const Graph& g, const PairList& pairs) {
  check_partition(g, pairs);
  MyCertificate cert;
  cert.pairs = pairs;
  cert.h = pairs.size();
  for (std::size_t i = 0; i < 5; ++i) cert.conditions[i].condition = static_cast<char>('a' + i);
  auto& [a, b, c, d, e] = cert.conditions;

  VertexList xs, ys;
  for (auto [x, y] : pairs) {
    xs.push_back(x);
    ys.push_back(y);
  }

  // (a) x's form a minimal vertex cover, y's a maximal independent set
  for (std::size_t i = 0; i < ys.size() && a.pass; ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      if (g.adjacent(ys[i], ys[j])) {
        fail(a, {g.name(ys[i]), g.name(ys[j])});
        break;
      }
  if (a.pass && !g.is_maximal_independent(ys)) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (std::find(ys.begin(), ys.end(), v) != ys.end()) continue;
      bool has = false;
      for (Vertex y : ys) has = has || g.adjacent(v, y);
      if (!has) {
        fail(a, {g.name(v)});
        break;
      }
    }
  }
  if (a.pass && !g.is_minimal_vertex_cover(xs)) {
    for (auto [u, w] : g.edges()) {
      if (std::find(xs.begin(), xs.end(), u) == xs.end() && std::find(xs.begin(), xs.end(), w) == xs.end()) {
        fail(a, {g.name(u), g.name(w)});
        break;
      }
    }
    if (a.pass) {
      // cover but not minimal: some x has every neighbour inside the cover
      for (Vertex x : xs) {
        bool needed = false;
        const Bitset& nx = g.neighbors(x);
        for (std::size_t w = nx.find_first(); w != Bitset::npos && !needed; w = nx.find_next(w))
          needed = std::find(xs.begin(), xs.end(), w) == xs.end();
        if (!needed) {
          fail(a, {g.name(x)});
          break;
        }
      }
    }
  }

  // (b) x_i ~ y_i
  for (auto [x, y] : pairs)
    if (!g.adjacent(x, y)) {
      fail(b, {g.name(x), g.name(y)});
      break;
    }

  check_c(g, pairs, c);
  check_d(g, pairs, d);

  // (e) x_i ~ y_j implies i <= j
  for (std::size_t i = 0; i < pairs.size() && e.pass; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g.adjacent(pairs[i].first, pairs[j].second)) {
        fail(e, {g.name(pairs[i].first), g.name(pairs[j].second)});
        break;
      }
  return cert;
}

// ---- ordering -------------------------------------------------------------

OrderingResult find_ordering(const Graph& g, const PairList& matching) {
  const std::size_t h = matching.size();
  std::vector<std::vector<std::size_t>> out(h);
  std::vector<std::size_t> indeg(h, 0);
  for (std::size_t p = 0; p < h; ++p)
    for (std::size_t q = 0; q < h; ++q)
      if (p != q && g.adjacent(matching[p].first, matching[q].second)) {
        out[p].push_back(q);
        ++indeg[q];
      }

  OrderingResult r;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t p = 0; p < h; ++p)
    if (indeg[p] == 0) ready.push(p);
  std::vector<bool> placed(h, false);
  while (!ready.empty()) {
    const std::size_t p = ready.top();
    ready.pop();
    placed[p] = true;
    r.ordered.push_back(matching[p]);
    for (std::size_t q : out[p])
      if (--indeg[q] == 0) ready.push(q);
  }
  if (r.ordered.size() == h) {
    r.feasible = true;
    return r;
  }

  // Every unplaced node keeps an unplaced predecessor; walk predecessors
  // until a node repeats.
  r.ordered.clear();
  std::vector<std::vector<std::size_t>> in(h);
  for (std::size_t p = 0; p < h; ++p)
    for (std::size_t q : out[p]) in[q].push_back(p);
  std::size_t cur = 0;
  while (placed[cur]) ++cur;
  std::vector<std::size_t> walk;
  std::vector<std::size_t> pos(h, h);
  while (pos[cur] == h) {
    pos[cur] = walk.size();
    walk.push_back(cur);
    for (std::size_t p : in[cur])
      if (!placed[p]) {
        cur = p;
        break;
      }
  }
  // walk[pos[cur]..] traced backwards along edges; reverse into edge order
  std::vector<std::size_t> cyc(walk.begin() + static_cast<std::ptrdiff_t>(pos[cur]), walk.end());
  std::reverse(cyc.begin(), cyc.end());
  // rotate so the smallest position leads
  auto smallest = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), smallest, cyc.end());
  for (std::size_t v : cyc) r.cycle.push_back(v + 1);
  r.cycle.push_back(cyc.front() + 1);
  return r;
}

// ---- Boolean construction -------------------------------------------------

namespace {

void require_boolean_with_atoms(const Poset& p) {
  if (!is_boolean(p).boolean) throw Error(ErrorCode::not_boolean, "poset is not Boolean");
  if (p.atom_bits().count() < 2) throw Error(ErrorCode::fewer_than_two_atoms, "poset has fewer than two atoms");
}

ElementId unique_complement(const Poset& p, ElementId x) {
  const ElementSet c = complements_of(p, x);
  if (c.size() != 1) contract_violation("Boolean element without a unique complement");
  return c.front();
}

}  // namespace

Stratification boolean_facet(const Poset& p) {
  require_boolean_with_atoms(p);
  const ZdGraph g = zero_divisor_graph(p);
  return boolean_facet(p, g);
}

Stratification boolean_facet(const Poset& p, const ZdGraph& g) {
  require_boolean_with_atoms(p);
  Stratification s;
  s.k = p.atom_bits().count();
  const std::size_t k = s.k;
  const std::size_t last = (k % 2 == 1) ? (k - 1) / 2 : (k - 2) / 2;

  std::vector<std::size_t> wt(p.size());
  for (ElementId x = 0; x < p.size(); ++x) wt[x] = weight(p, x);

  for (std::size_t i = 1; i <= last; ++i) {
    ElementSet b;
    for (ElementId x = 0; x < p.size(); ++x)
      if (wt[x] == k - i) b.push_back(x);
    s.facet.insert(s.facet.end(), b.begin(), b.end());
    s.strata.emplace_back(i, std::move(b));
  }
  if (k % 2 == 0) {
    for (ElementId x = 0; x < p.size(); ++x) {
      if (wt[x] != k / 2) continue;
      // smaller id of each complementary pair
      if (x < unique_complement(p, x)) s.b_hat.push_back(x);
    }
    s.facet.insert(s.facet.end(), s.b_hat.begin(), s.b_hat.end());
  }
  std::sort(s.facet.begin(), s.facet.end());

  VertexList fv;
  for (ElementId x : s.facet) {
    const auto v = g.vertex_of(x);
    if (!v) contract_violation("stratified element is not a graph vertex");
    fv.push_back(*v);
  }
  if (2 * fv.size() != g.graph.vertex_count() || !g.graph.is_maximal_independent(fv))
    contract_violation("weight-stratified set is not a facet of size |V|/2");
  return s;
}

PairList boolean_labeling(const Poset& p, const ZdGraph& g, const Stratification& s) {
  ElementSet ys = s.facet;
  std::vector<std::size_t> wt(p.size());
  for (ElementId y : ys) wt[y] = weight(p, y);
  std::stable_sort(ys.begin(), ys.end(), [&](ElementId a, ElementId b) {
    return wt[a] != wt[b] ? wt[a] > wt[b] : a < b;
  });
  PairList pairs;
  for (ElementId y : ys) {
    const auto yv = g.vertex_of(y);
    const auto xv = g.vertex_of(unique_complement(p, y));
    if (!yv || !xv) contract_violation("labeling element is not a graph vertex");
    pairs.emplace_back(*xv, *yv);
  }
  return pairs;
}

// ---- generic relabeling search --------------------------------------------

namespace {

class RelabelingSearch {
public:
  RelabelingSearch(const Graph& g, std::size_t max_nodes) : g_(g), max_nodes_(max_nodes) {}

  // Returns a passing certificate, or nullopt. Sets exhausted_ on node limit.
  std::optional<MyCertificate> try_facet(const VertexList& ys) {
    xs_.clear();
    ys_ = ys;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (!std::binary_search(ys.begin(), ys.end(), v)) xs_.push_back(v);
    if (xs_.size() != ys_.size()) return std::nullopt;

    if (auto c = complement_heuristic()) return c;
    match_.assign(xs_.size(), g_.vertex_count());
    used_.assign(g_.vertex_count(), false);
    return assign(0);
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::size_t nodes() const noexcept { return nodes_; }

private:
  std::optional<MyCertificate> finish(const PairList& matching) {
    MyCertificate probe = verify_my_conditions(g_, matching);
    if (!probe.condition('a').pass || !probe.condition('b').pass || !probe.condition('c').pass ||
        !probe.condition('d').pass)
      return std::nullopt;
    OrderingResult ord = find_ordering(g_, matching);
    if (!ord.feasible) return std::nullopt;
    MyCertificate cert = verify_my_conditions(g_, ord.ordered);
    if (!cert.all_pass()) contract_violation("topological order failed condition (e)");
    return cert;
  }

  // Pair each x with its unique graph complement when that is a bijection.
  std::optional<MyCertificate> complement_heuristic() {
    PairList m;
    std::vector<bool> hit(g_.vertex_count(), false);
    for (Vertex x : xs_) {
      const VertexList gc = graph_complements(g_, x);
      if (gc.size() != 1 || !std::binary_search(ys_.begin(), ys_.end(), gc.front()) || hit[gc.front()])
        return std::nullopt;
      hit[gc.front()] = true;
      m.emplace_back(x, gc.front());
    }
    return finish(m);
  }

  // (d) restricted to already matched positions, including j.
  bool d_consistent(std::size_t j) const {
    for (std::size_t i = 0; i < j; ++i) {
      if (g_.adjacent(xs_[i], match_[j]) && g_.adjacent(xs_[i], xs_[j])) return false;
      if (g_.adjacent(xs_[j], match_[i]) && g_.adjacent(xs_[j], xs_[i])) return false;
    }
    return true;
  }

  std::optional<MyCertificate> assign(std::size_t j) {
    if (exhausted_) return std::nullopt;
    if (j == xs_.size()) {
      PairList m;
      for (std::size_t i = 0; i < xs_.size(); ++i) m.emplace_back(xs_[i], match_[i]);
      return finish(m);
    }
    const Bitset& nx = g_.neighbors(xs_[j]);
    for (Vertex y : ys_) {
      if (used_[y] || !nx.test(y)) continue;
      if (++nodes_ > max_nodes_) {
        exhausted_ = true;
        return std::nullopt;
      }
      match_[j] = y;
      used_[y] = true;
      if (d_consistent(j))
        if (auto c = assign(j + 1)) return c;
      used_[y] = false;
      if (exhausted_) return std::nullopt;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  VertexList xs_, ys_;
  std::vector<Vertex> match_;
  std::vector<bool> used_;
};

}  // namespace

MatchingSearchResult search_relabeling(const IndependenceComplex& c, std::size_t max_nodes) {
  MatchingSearchResult r;
  RelabelingSearch search(c.graph, max_nodes);
  for (const auto& facet : c.facets()) {
    if (auto cert = search.try_facet(facet)) {
      r.verdict = CmVerdict::cm;
      r.certificate = std::move(cert);
      r.nodes = search.nodes();
      return r;
    }
    if (search.exhausted()) {
      r.nodes = search.nodes();
      return r;
    }
  }
  r.verdict = CmVerdict::not_cm;
  r.nodes = search.nodes();
  return r;
}

// ---- pipeline -------------------------------------------------------------

CmResult is_cohen_macaulay(const Poset& p, const CmConfig& config) {
  const ZdGraph g = zero_divisor_graph(p);
  if (g.graph.vertex_count() == 0) throw Error(ErrorCode::empty_graph, "zero-divisor graph has no vertices");

  CmResult r;
  if (is_boolean(p).boolean && p.atom_bits().count() >= 2) {
    r.path = CmPath::boolean_certificate;
    const Stratification s = boolean_facet(p, g);
    const PairList labeled = boolean_labeling(p, g, s);
    r.stratum_order_valid = verify_my_conditions(g.graph, labeled).all_pass();
    const OrderingResult ord = find_ordering(g.graph, labeled);
    if (!ord.feasible) contract_violation("Boolean labeling admits no valid ordering");
    MyCertificate cert = verify_my_conditions(g.graph, ord.ordered);
    if (!cert.all_pass()) contract_violation("Boolean certificate fails a condition");
    r.verdict = CmVerdict::cm;
    r.certificate = std::move(cert);
    if (!*r.stratum_order_valid) r.detail = "discrepancy: weight order violates (e); topological order used";
    return r;
  }

  IndependenceComplex c;
  try {
    c = independence_complex(g.graph, config.max_vertices);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::size_limit_exceeded) throw;
    r.path = CmPath::size_limit;
    r.detail = e.what();
    return r;
  }

  if (!is_well_covered(c)) {
    r.path = CmPath::not_unmixed;
    r.verdict = CmVerdict::not_cm;
    r.detail = "maximal independent sets of different sizes";
    return r;
  }

  if (is_very_well_covered(c)) {
    r.path = CmPath::matching_search;
    MatchingSearchResult m = search_relabeling(c, config.max_search_nodes);
    r.verdict = m.verdict;
    r.certificate = std::move(m.certificate);
    r.search_nodes = m.nodes;
    if (m.verdict == CmVerdict::inconclusive) r.detail = "search node limit reached";
    return r;
  }

  r.path = CmPath::homology_oracle;
  try {
    r.verdict = reisner_cm(c.complex, config.max_homology_vertices).cohen_macaulay ? CmVerdict::cm : CmVerdict::not_cm;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::size_limit_exceeded) throw;
    r.verdict = CmVerdict::inconclusive;
    r.detail = e.what();
  }
  return r;
}

const char* verdict_name(CmVerdict v) noexcept {
  switch (v) {
    case CmVerdict::cm: return "yes";
    case CmVerdict::not_cm: return "no";
    case CmVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* path_name(CmPath p) noexcept {
  switch (p) {
    case CmPath::boolean_certificate: return "boolean-certificate";
    case CmPath::matching_search: return "matching-search";
    case CmPath::not_unmixed: return "not-unmixed";
    case CmPath::homology_oracle: return "homology-oracle";
    case CmPath::size_limit: return "size-limit";
  }
  return "?";
}

std::string certificate_json(const Graph& g, const MyCertificate& cert) {
  nlohmann::ordered_json j;
  j["h"] = cert.h;
  j["pairs"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    nlohmann::ordered_json pr;
    pr["index"] = i + 1;
    pr["x"] = g.name(cert.pairs[i].first);
    pr["y"] = g.name(cert.pairs[i].second);
    j["pairs"].push_back(pr);
  }
  nlohmann::ordered_json conds;
  for (const auto& c : cert.conditions) {
    nlohmann::ordered_json s;
    s["pass"] = c.pass;
    if (!c.pass) s["witness"] = c.witness;
    conds[std::string(1, c.condition)] = s;
  }
  j["conditions"] = conds;
  j["valid"] = cert.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace posetcm
