#ifndef POSETCM_POSET_HPP
#define POSETCM_POSET_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetcm/bitset.hpp"

namespace posetcm {

// Canonical element id: position in the declaring file or generator.
using ElementId = std::size_t;

// Set-valued results are always emitted sorted ascending by id.
using ElementSet = std::vector<ElementId>;

// A finite poset. The order relation is stored fully closed as one bit row per
// element in each direction, so comparability is O(1) and cones are row
// intersections. Immutable after construction.
class Poset {
public:
  // Builds the reflexive-transitive closure of `le` (pairs a <= b) and checks
  // antisymmetry. Throws Error{duplicate_element, antisymmetry_violation}.
  static Poset from_relation(std::vector<std::string> names,
                             std::span<const std::pair<ElementId, ElementId>> le);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ElementId x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ElementId> find(std::string_view name) const;

  bool leq(ElementId a, ElementId b) const { return down_[b].test(a); }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }

  // down(x) = {y : y <= x}, up(x) = {y : y >= x}
  const Bitset& down(ElementId x) const { return down_.at(x); }
  const Bitset& up(ElementId x) const { return up_.at(x); }

  std::optional<ElementId> bottom() const noexcept { return bottom_; }
  std::optional<ElementId> top() const noexcept { return top_; }
  bool bounded() const noexcept { return bottom_ && top_; }

  // Throw Error{no_bottom} / Error{no_top} when absent.
  ElementId require_bottom() const;
  ElementId require_top() const;

  // Atoms as a bit row; empty when there is no bottom.
  const Bitset& atom_bits() const noexcept { return atoms_; }

  Bitset upper_cone(const Bitset& a) const;
  Bitset lower_cone(const Bitset& a) const;

  // {a,b}^l == {0}. Requires a bottom.
  bool meet_is_bottom(ElementId a, ElementId b) const;
  // {a,b}^u == {1}. Requires a top.
  bool join_is_top(ElementId a, ElementId b) const;

  Bitset make_set() const { return Bitset(size()); }
  Bitset make_set(std::span<const ElementId> ids) const;

  // Hasse diagram edges (a covered by b), sorted.
  std::vector<std::pair<ElementId, ElementId>> covers() const;

private:
  Poset() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::optional<ElementId> bottom_;
  std::optional<ElementId> top_;
  Bitset atoms_;
};

// ---- file format ----------------------------------------------------------

Poset parse_poset(std::string_view text);
// Canonical `poset v1` text: every element, then the cover relations.
std::string format_poset(const Poset& p);

// ---- cones, atoms, weights ------------------------------------------------

// Empty `a` yields every element.
ElementSet upper_cone(const Poset& p, std::span<const ElementId> a);
ElementSet lower_cone(const Poset& p, std::span<const ElementId> a);

ElementSet atoms(const Poset& p);

// Number of atoms below x. Throws Error{no_bottom}.
std::size_t weight(const Poset& p, ElementId x);
// Weight of the top element. Throws Error{no_bottom, no_top}.
std::size_t poset_weight(const Poset& p);

// ---- complements ----------------------------------------------------------

ElementSet complements_of(const Poset& p, ElementId x);
std::optional<ElementId> pseudocomplement_of(const Poset& p, ElementId x);

// ---- structural predicates ------------------------------------------------

struct DistributivityResult {
  bool distributive = true;
  // First failing (a,b,c) in lexicographic id order.
  std::optional<std::array<ElementId, 3>> witness;
};
DistributivityResult is_distributive(const Poset& p);

enum class BooleanFailure { none, not_bounded, not_complemented, not_distributive };

struct BooleanResult {
  bool boolean = false;
  BooleanFailure reason = BooleanFailure::none;
  // Element without a complement when reason == not_complemented.
  std::optional<ElementId> uncomplemented;
  // Distributivity witness when reason == not_distributive.
  std::optional<std::array<ElementId, 3>> witness;
};
BooleanResult is_boolean(const Poset& p);

bool is_ssc(const Poset& p);
bool is_wssc(const Poset& p);

// ---- products -------------------------------------------------------------

struct ProductPoset {
  std::vector<Poset> factors;
  Poset carrier;
  // coords[id][i] = coordinate of carrier element `id` in factor i
  std::vector<std::vector<ElementId>> coords;
};

// Componentwise order over all coordinate tuples, enumerated with the last
// factor varying fastest. Throws Error{too_few_factors, unbounded_factor}.
ProductPoset direct_product(std::vector<Poset> factors);

}  // namespace posetcm

#endif
