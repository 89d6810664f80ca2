#ifndef POSETCM_CM_CERTIFICATE_HPP
#define POSETCM_CM_CERTIFICATE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetcm/graph.hpp"
#include "posetcm/homology.hpp"
#include "posetcm/independence_complex.hpp"
#include "posetcm/poset.hpp"
#include "posetcm/zero_divisor_graph.hpp"

namespace posetcm {

// (x_i, y_i): x_i in the vertex cover, y_i in the independent set.
using LabeledPair = std::pair<Vertex, Vertex>;
using PairList = std::vector<LabeledPair>;

struct ConditionStatus {
  char condition = 'a';
  bool pass = true;
  std::vector<std::string> witness;  // vertex names
};

// Relabeling x_1..x_h, y_1..y_h of a very well-covered graph together with
// the outcome of each of the five conditions (a)-(e).
struct MyCertificate {
  PairList pairs;
  std::size_t h = 0;
  std::array<ConditionStatus, 5> conditions{};

  bool all_pass() const noexcept;
  const ConditionStatus& condition(char c) const { return conditions.at(static_cast<std::size_t>(c - 'a')); }
};

// Checks (a)-(e) literally against `g`. Throws Error{pairs_dont_partition}
// unless the pairs use every vertex exactly once.
MyCertificate verify_my_conditions(const Graph& g, const PairList& pairs);

struct OrderingResult {
  bool feasible = false;
  PairList ordered;                 // valid index assignment when feasible
  std::vector<std::size_t> cycle;   // 1-based input positions, first repeated at end
};

// Orders a matching so that x_p ~ y_q implies p <= q. Among valid orders the
// one taking the smallest available input position first is returned.
OrderingResult find_ordering(const Graph& g, const PairList& matching);

// Weight strata of a Boolean poset used to build the canonical facet.
struct Stratification {
  std::size_t k = 0;                                  // number of atoms
  std::vector<std::pair<std::size_t, ElementSet>> strata;  // (i, elements of weight k-i)
  ElementSet b_hat;                                   // one member per weight-k/2 pair
  ElementSet facet;                                   // union, sorted by id
};

// Throws Error{not_boolean, fewer_than_two_atoms}.
Stratification boolean_facet(const Poset& p, const ZdGraph& g);
Stratification boolean_facet(const Poset& p);

// y_i = facet members by decreasing weight, ties by ascending id;
// x_i = complement of y_i.
PairList boolean_labeling(const Poset& p, const ZdGraph& g, const Stratification& s);

enum class CmVerdict { cm, not_cm, inconclusive };

enum class CmPath {
  boolean_certificate,  // constructive labeling on a Boolean poset
  matching_search,      // very well-covered: searched relabelings
  not_unmixed,          // facets of different sizes
  homology_oracle,      // well-covered but not very well-covered
  size_limit,           // enumeration cap hit before any decision
};

struct CmConfig {
  std::size_t max_vertices = default_max_vertices;
  std::size_t max_homology_vertices = default_max_homology_vertices;
  std::size_t max_search_nodes = 1'000'000;
};

struct CmResult {
  CmVerdict verdict = CmVerdict::inconclusive;
  CmPath path = CmPath::size_limit;
  std::optional<MyCertificate> certificate;
  // Boolean path: whether the weight-ordered labeling satisfies (e) as is.
  std::optional<bool> stratum_order_valid;
  std::size_t search_nodes = 0;
  std::string detail;
};

struct MatchingSearchResult {
  CmVerdict verdict = CmVerdict::inconclusive;
  std::optional<MyCertificate> certificate;
  std::size_t nodes = 0;
};

// Exhaustive search for a relabeling satisfying (a)-(e) on a very
// well-covered graph. Inconclusive once `max_nodes` assignments are tried.
MatchingSearchResult search_relabeling(const IndependenceComplex& c, std::size_t max_nodes);

// Throws Error{empty_graph} when Γ(P) has no vertices.
CmResult is_cohen_macaulay(const Poset& p, const CmConfig& config = {});

const char* verdict_name(CmVerdict v) noexcept;
const char* path_name(CmPath p) noexcept;

// Stable-key JSON text of a certificate.
std::string certificate_json(const Graph& g, const MyCertificate& cert);

}  // namespace posetcm

#endif
