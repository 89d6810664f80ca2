#ifndef POSETCM_PRODUCT_HPP
#define POSETCM_PRODUCT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetcm/cm_certificate.hpp"
#include "posetcm/poset.hpp"
#include "posetcm/zero_divisor_graph.hpp"

namespace posetcm {

// Product of bounded posets that each have a single atom. Not copyable: the
// graph refers back to the carrier poset.
class ProductAnalysis {
public:
  explicit ProductAnalysis(ProductPoset product);
  ProductAnalysis(const ProductAnalysis&) = delete;
  ProductAnalysis& operator=(const ProductAnalysis&) = delete;

  const ProductPoset& product() const noexcept { return product_; }
  const Poset& carrier() const noexcept { return product_.carrier; }
  std::size_t arity() const noexcept { return product_.factors.size(); }
  const std::vector<std::size_t>& factor_sizes() const noexcept { return sizes_; }
  // Non-zero-divisors: every coordinate nonzero.
  const ElementSet& dense() const noexcept { return dense_; }
  // q_i as a carrier element, i is 1-based.
  ElementId atom(std::size_t i) const;
  const ZdGraph& graph() const noexcept { return graph_; }

private:
  ProductPoset product_;
  std::vector<std::size_t> sizes_;
  ElementSet dense_;
  std::vector<ElementId> atoms_;
  ZdGraph graph_;
};

// Throws Error{unbounded_factor, too_few_factors, not_ascending,
// factor_has_zero_divisors}.
std::unique_ptr<ProductAnalysis> validate_factors(std::vector<Poset> factors);

// {q_i}^u minus the dense elements, as sorted element ids. Asserts maximal
// independence in Γ. Throws Error{index_out_of_range}.
ElementSet j_single(const ProductAnalysis& a, std::size_t i);

// Elements above two of q_i, q_j, q_k, minus the dense elements. Asserts
// maximal independence. Throws Error{indices_not_distinct_or_ordered}.
ElementSet j_triple(const ProductAnalysis& a, std::size_t i, std::size_t j, std::size_t k);

struct PredictedCounts {
  std::vector<std::int64_t> j_single_sizes;
  std::optional<std::int64_t> j_triple_size;  // only when all sizes are equal
};

// Inclusion-exclusion counts. Throws Error{too_few_factors} for n < 2; the
// triple count needs n >= 3 and equal sizes.
PredictedCounts predicted_counts(std::span<const std::size_t> sizes);
// Throws Error{need_equal_sizes_for_triple, too_few_factors}.
std::int64_t predicted_triple(std::span<const std::size_t> sizes);

struct WellCoveredVerdict {
  bool well_covered = false;
  std::string explanation;
  // Facet enumeration result, absent above the vertex cap.
  std::optional<bool> enumerated;
};

// Throws Error{too_few_factors} for n < 3.
WellCoveredVerdict well_covered_verdict(const ProductAnalysis& a, std::size_t max_vertices = default_max_vertices);

struct EquivalenceReport {
  // cohen-macaulay, well-covered, all sizes 2, Boolean lattice, Boolean poset
  std::array<std::optional<bool>, 5> statements{};
  bool consistent = false;
  bool unverified_by_enumeration = false;
  CmResult cm;
};

EquivalenceReport equivalence_suite(const ProductAnalysis& a, const CmConfig& config = {});

// Lattice with every pair joined, isomorphic to 2^(atom count) via atom
// supports.
bool is_boolean_lattice(const Poset& p);

struct BipartiteReport {
  bool complete_bipartite = false;
  std::size_t left = 0;   // |P_1| - 1
  std::size_t right = 0;  // |P_2| - 1
  bool well_covered = false;
  bool cohen_macaulay = false;
};

// Throws Error{wrong_arity} unless n = 2.
BipartiteReport bipartite_case(const ProductAnalysis& a);

}  // namespace posetcm

#endif
