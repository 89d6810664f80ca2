#include "posetcm/product.hpp"

#include <algorithm>

#include "posetcm/error.hpp"
#include "posetcm/independence_complex.hpp"

namespace posetcm {

namespace {

VertexList as_vertices(const ZdGraph& g, const ElementSet& xs) {
  VertexList out;
  for (ElementId x : xs) {
    const auto v = g.vertex_of(x);
    if (!v) contract_violation("element '" + g.owner->name(x) + "' is not a vertex");
    out.push_back(*v);
  }
  return out;
}

void assert_maximal_independent(const ProductAnalysis& a, const ElementSet& xs, const char* what) {
  if (!a.graph().graph.is_maximal_independent(as_vertices(a.graph(), xs)))
    contract_violation(std::string(what) + " is not a maximal independent set");
}

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

ProductAnalysis::ProductAnalysis(ProductPoset product) : product_(std::move(product)) {
  for (const auto& f : product_.factors) sizes_.push_back(f.size());
  const Poset& c = product_.carrier;
  for (ElementId x = 0; x < c.size(); ++x) {
    bool all_nonzero = true;
    for (std::size_t i = 0; i < arity() && all_nonzero; ++i)
      all_nonzero = product_.coords[x][i] != *product_.factors[i].bottom();
    if (all_nonzero) dense_.push_back(x);
  }
  for (std::size_t i = 0; i < arity(); ++i) {
    const ElementId qi = product_.factors[i].atom_bits().find_first();
    for (ElementId x = 0; x < c.size(); ++x) {
      bool match = true;
      for (std::size_t m = 0; m < arity() && match; ++m)
        match = product_.coords[x][m] == (m == i ? qi : *product_.factors[m].bottom());
      if (match) {
        atoms_.push_back(x);
        break;
      }
    }
  }
  graph_ = zero_divisor_graph(product_.carrier);
}

ElementId ProductAnalysis::atom(std::size_t i) const {
  if (i < 1 || i > arity())
    throw Error(ErrorCode::index_out_of_range, "factor index " + std::to_string(i) + " out of range");
  return atoms_[i - 1];
}

std::unique_ptr<ProductAnalysis> validate_factors(std::vector<Poset> factors) {
  if (factors.size() < 2) throw Error(ErrorCode::too_few_factors, "need at least two factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Poset& f = factors[i];
    const std::string tag = "factor " + std::to_string(i + 1);
    if (!f.bounded()) throw Error(ErrorCode::unbounded_factor, tag + " is not bounded");
    if (f.size() < 2) throw Error(ErrorCode::bad_param, tag + " has fewer than two elements");
    if (i > 0 && factors[i - 1].size() > f.size())
      throw Error(ErrorCode::not_ascending, "factor sizes must be listed in ascending order");
    if (zero_divisors(f) != ElementSet{*f.bottom()})
      throw Error(ErrorCode::factor_has_zero_divisors, tag + " has nonzero zero-divisors");
  }
  return std::make_unique<ProductAnalysis>(direct_product(std::move(factors)));
}

ElementSet j_single(const ProductAnalysis& a, std::size_t i) {
  const ElementId q = a.atom(i);
  ElementSet out;
  const Bitset& above = a.carrier().up(q);
  for (std::size_t x = above.find_first(); x != Bitset::npos; x = above.find_next(x))
    if (!std::binary_search(a.dense().begin(), a.dense().end(), x)) out.push_back(x);
  assert_maximal_independent(a, out, "J_i");
  return out;
}

ElementSet j_triple(const ProductAnalysis& a, std::size_t i, std::size_t j, std::size_t k) {
  if (!(1 <= i && i < j && j < k && k <= a.arity()))
    throw Error(ErrorCode::indices_not_distinct_or_ordered, "need 1 <= i < j < k <= n");
  const Poset& c = a.carrier();
  const Bitset& ui = c.up(a.atom(i));
  const Bitset& uj = c.up(a.atom(j));
  const Bitset& uk = c.up(a.atom(k));
  Bitset s = ui & uj;
  s |= uj & uk;
  s |= ui & uk;
  ElementSet out;
  for (std::size_t x = s.find_first(); x != Bitset::npos; x = s.find_next(x))
    if (!std::binary_search(a.dense().begin(), a.dense().end(), x)) out.push_back(x);
  assert_maximal_independent(a, out, "J_{i,j,k}");
  return out;
}

PredictedCounts predicted_counts(std::span<const std::size_t> sizes) {
  if (sizes.size() < 2) throw Error(ErrorCode::too_few_factors, "need at least two factor sizes");
  PredictedCounts r;
  std::int64_t dense = 1;
  for (std::size_t s : sizes) dense *= static_cast<std::int64_t>(s) - 1;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::int64_t prod = static_cast<std::int64_t>(sizes[i]) - 1;
    for (std::size_t m = 0; m < sizes.size(); ++m)
      if (m != i) prod *= static_cast<std::int64_t>(sizes[m]);
    r.j_single_sizes.push_back(prod - dense);
  }
  const bool equal = std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == sizes[0]; });
  if (sizes.size() >= 3 && equal) r.j_triple_size = predicted_triple(sizes);
  return r;
}

std::int64_t predicted_triple(std::span<const std::size_t> sizes) {
  if (sizes.size() < 3) throw Error(ErrorCode::too_few_factors, "the triple count needs n >= 3");
  if (!std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == sizes[0]; }))
    throw Error(ErrorCode::need_equal_sizes_for_triple, "the closed triple count needs equal factor sizes");
  const auto alpha = static_cast<std::int64_t>(sizes[0]);
  const std::size_t n = sizes.size();
  const std::int64_t dense = ipow(alpha - 1, n);
  const std::int64_t pair_part = ipow(alpha - 1, 2) * ipow(alpha, n - 2) - dense;
  const std::int64_t triple_part = ipow(alpha - 1, 3) * ipow(alpha, n - 3) - dense;
  return 3 * pair_part - 2 * triple_part;
}

WellCoveredVerdict well_covered_verdict(const ProductAnalysis& a, std::size_t max_vertices) {
  if (a.arity() < 3) throw Error(ErrorCode::too_few_factors, "the verdict needs n >= 3");
  WellCoveredVerdict v;
  const auto& sizes = a.factor_sizes();
  v.well_covered = std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });

  std::vector<std::size_t> singles;
  for (std::size_t i = 1; i <= a.arity(); ++i) singles.push_back(j_single(a, i).size());
  const std::size_t triple = j_triple(a, 1, 2, 3).size();

  std::string witness;
  for (std::size_t i = 0; i < singles.size() && witness.empty(); ++i)
    for (std::size_t j = i + 1; j < singles.size(); ++j)
      if (singles[i] != singles[j]) {
        witness = "|J_" + std::to_string(i + 1) + "| = " + std::to_string(singles[i]) + " != " +
                  std::to_string(singles[j]) + " = |J_" + std::to_string(j + 1) + "|";
        break;
      }
  if (witness.empty() && singles[0] != triple)
    witness = "|J_1| = " + std::to_string(singles[0]) + " != " + std::to_string(triple) + " = |J_{1,2,3}|";

  if (v.well_covered) {
    v.explanation = "every factor has two elements; |J_i| = |J_{1,2,3}| = " + std::to_string(triple);
  } else {
    v.explanation = witness.empty() ? "no unequal maximal independent sets among J_i, J_{1,2,3}" : witness;
  }

  if (a.graph().graph.vertex_count() <= std::min(max_vertices, hard_max_vertices))
    v.enumerated = is_well_covered(independence_complex(a.graph().graph, max_vertices));
  return v;
}

bool is_boolean_lattice(const Poset& p) {
  if (!is_boolean(p).boolean) return false;
  const std::size_t n = p.size();
  // every pair has a least upper bound
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b) {
      const Bitset ub = p.up(a) & p.up(b);
      bool has_least = false;
      for (std::size_t m = ub.find_first(); m != Bitset::npos && !has_least; m = ub.find_next(m))
        has_least = ub.is_subset_of(p.up(m));
      if (!has_least) return false;
    }
  // isomorphic to 2^k through atom supports
  const ElementSet at = p.atom_bits().members();
  const std::size_t k = at.size();
  if (k >= 20 || n != (std::size_t{1} << k)) return false;
  std::vector<std::uint32_t> support(n, 0);
  std::vector<bool> hit(n, false);
  for (ElementId x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i)
      if (p.leq(at[i], x)) support[x] |= std::uint32_t{1} << i;
    if (hit[support[x]]) return false;
    hit[support[x]] = true;
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (p.leq(x, y) != ((support[x] & ~support[y]) == 0)) return false;
  return true;
}

EquivalenceReport equivalence_suite(const ProductAnalysis& a, const CmConfig& config) {
  if (a.arity() < 3) throw Error(ErrorCode::too_few_factors, "the equivalence suite needs n >= 3");
  EquivalenceReport r;
  const auto& sizes = a.factor_sizes();
  const bool all_two = std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });

  r.cm = is_cohen_macaulay(a.carrier(), config);
  if (r.cm.verdict != CmVerdict::inconclusive) r.statements[0] = r.cm.verdict == CmVerdict::cm;

  const WellCoveredVerdict wc = well_covered_verdict(a, config.max_vertices);
  if (wc.enumerated) {
    r.statements[1] = *wc.enumerated;
  } else {
    r.statements[1] = wc.well_covered;
    r.unverified_by_enumeration = true;
  }
  r.statements[2] = all_two;
  r.statements[3] = is_boolean_lattice(a.carrier());
  r.statements[4] = is_boolean(a.carrier()).boolean;

  r.consistent = true;
  for (const auto& s : r.statements)
    if (s && *s != all_two) r.consistent = false;
  return r;
}

BipartiteReport bipartite_case(const ProductAnalysis& a) {
  if (a.arity() != 2) throw Error(ErrorCode::wrong_arity, "the bipartite case needs exactly two factors");
  const ProductPoset& pp = a.product();
  const ElementId z1 = *pp.factors[0].bottom(), z2 = *pp.factors[1].bottom();
  ElementSet left, right;
  for (ElementId x = 0; x < pp.carrier.size(); ++x) {
    const bool nz1 = pp.coords[x][0] != z1, nz2 = pp.coords[x][1] != z2;
    if (nz1 && !nz2) left.push_back(x);
    if (!nz1 && nz2) right.push_back(x);
  }
  BipartiteReport r;
  r.left = left.size();
  r.right = right.size();

  const ZdGraph& g = a.graph();
  ElementSet parts = left;
  parts.insert(parts.end(), right.begin(), right.end());
  std::sort(parts.begin(), parts.end());
  bool ok = parts == g.elements;
  if (ok) {
    const VertexList lv = as_vertices(g, left), rv = as_vertices(g, right);
    ok = g.graph.edge_count() == lv.size() * rv.size();
    for (Vertex l : lv)
      for (Vertex rr : rv) ok = ok && g.graph.adjacent(l, rr);
  }
  r.complete_bipartite = ok;
  r.well_covered = ok && r.left == r.right;
  r.cohen_macaulay = ok && r.left == 1 && r.right == 1;
  return r;
}

}  // namespace posetcm
