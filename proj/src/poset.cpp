#include "posetcm/poset.hpp"

#include <algorithm>
#include <sstream>

#include "posetcm/error.hpp"

namespace posetcm {

namespace {

ElementSet to_set(const Bitset& b) { return b.members(); }

std::string line_prefix(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

Poset Poset::from_relation(std::vector<std::string> names,
                           std::span<const std::pair<ElementId, ElementId>> le) {
  Poset p;
  const std::size_t n = names.size();
  for (ElementId i = 0; i < n; ++i) {
    if (!p.index_.emplace(names[i], i).second)
      throw Error(ErrorCode::duplicate_element, "duplicate element '" + names[i] + "'");
  }
  p.names_ = std::move(names);

  // up_[a] = everything reachable from a; closed with Warshall on bit rows.
  p.up_.assign(n, Bitset(n));
  for (ElementId i = 0; i < n; ++i) p.up_[i].set(i);
  for (auto [a, b] : le) {
    if (a >= n || b >= n) throw Error(ErrorCode::invalid_argument, "relation id out of range");
    p.up_[a].set(b);
  }
  for (ElementId k = 0; k < n; ++k) {
    const Bitset row_k = p.up_[k];
    for (ElementId i = 0; i < n; ++i)
      if (i != k && p.up_[i].test(k)) p.up_[i] |= row_k;
  }

  p.down_.assign(n, Bitset(n));
  for (ElementId a = 0; a < n; ++a)
    for (std::size_t b = p.up_[a].find_first(); b != Bitset::npos; b = p.up_[a].find_next(b))
      p.down_[b].set(a);

  for (ElementId a = 0; a < n; ++a) {
    const Bitset both = p.up_[a] & p.down_[a];
    if (both.count() > 1) {
      ElementId b = both.find_first();
      if (b == a) b = both.find_next(b);
      throw Error(ErrorCode::antisymmetry_violation,
                  "order cycle between '" + p.names_[a] + "' and '" + p.names_[b] + "'");
    }
  }

  for (ElementId a = 0; a < n; ++a) {
    if (p.up_[a].count() == n) p.bottom_ = a;
    if (p.down_[a].count() == n) p.top_ = a;
  }

  p.atoms_ = Bitset(n);
  if (p.bottom_) {
    for (ElementId a = 0; a < n; ++a)
      if (a != *p.bottom_ && p.down_[a].count() == 2) p.atoms_.set(a);
  }
  return p;
}

std::optional<ElementId> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Poset::require_bottom() const {
  if (!bottom_) throw Error(ErrorCode::no_bottom, "poset has no least element");
  return *bottom_;
}

ElementId Poset::require_top() const {
  if (!top_) throw Error(ErrorCode::no_top, "poset has no greatest element");
  return *top_;
}

Bitset Poset::upper_cone(const Bitset& a) const {
  Bitset r(size(), true);
  for (std::size_t x = a.find_first(); x != Bitset::npos; x = a.find_next(x)) r &= up_[x];
  return r;
}

Bitset Poset::lower_cone(const Bitset& a) const {
  Bitset r(size(), true);
  for (std::size_t x = a.find_first(); x != Bitset::npos; x = a.find_next(x)) r &= down_[x];
  return r;
}

bool Poset::meet_is_bottom(ElementId a, ElementId b) const {
  require_bottom();
  return down_[a].count_and(down_[b]) == 1;
}

bool Poset::join_is_top(ElementId a, ElementId b) const {
  require_top();
  return up_[a].count_and(up_[b]) == 1;
}

Bitset Poset::make_set(std::span<const ElementId> ids) const {
  Bitset r(size());
  for (ElementId x : ids) {
    if (x >= size()) throw Error(ErrorCode::invalid_argument, "element id out of range");
    r.set(x);
  }
  return r;
}

std::vector<std::pair<ElementId, ElementId>> Poset::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  const std::size_t n = size();
  for (ElementId a = 0; a < n; ++a) {
    for (std::size_t b = up_[a].find_first(); b != Bitset::npos; b = up_[a].find_next(b)) {
      if (b == a) continue;
      // a < b is a cover iff nothing lies strictly between
      Bitset between = up_[a] & down_[b];
      if (between.count() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

// ---- file format ----------------------------------------------------------

Poset parse_poset(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, ElementId> index;
  std::vector<std::pair<ElementId, ElementId>> le;
  bool header_seen = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(std::move(t));
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!header_seen) {
      if (line_no != 1 || tok.size() != 2 || tok[0] != "poset" || tok[1] != "v1")
        throw Error(ErrorCode::syntax_error, line_prefix(line_no) + "expected header 'poset v1' on line 1");
      header_seen = true;
    } else if (tok[0] == "elem") {
      if (tok.size() != 2)
        throw Error(ErrorCode::syntax_error, line_prefix(line_no) + "'elem' takes exactly one name");
      if (!index.emplace(tok[1], names.size()).second)
        throw Error(ErrorCode::duplicate_element, line_prefix(line_no) + "duplicate element '" + tok[1] + "'");
      names.push_back(tok[1]);
    } else if (tok[0] == "le") {
      if (tok.size() != 3)
        throw Error(ErrorCode::syntax_error, line_prefix(line_no) + "'le' takes exactly two names");
      auto a = index.find(tok[1]);
      auto b = index.find(tok[2]);
      if (a == index.end())
        throw Error(ErrorCode::unknown_name, line_prefix(line_no) + "unknown element '" + tok[1] + "'");
      if (b == index.end())
        throw Error(ErrorCode::unknown_name, line_prefix(line_no) + "unknown element '" + tok[2] + "'");
      le.emplace_back(a->second, b->second);
    } else {
      throw Error(ErrorCode::syntax_error, line_prefix(line_no) + "unknown directive '" + tok[0] + "'");
    }
    if (end == text.size()) break;
  }
  if (!header_seen) throw Error(ErrorCode::syntax_error, "line 1: missing header 'poset v1'");
  return Poset::from_relation(std::move(names), le);
}

std::string format_poset(const Poset& p) {
  std::string out = "poset v1\n";
  for (const auto& n : p.names()) out += "elem " + n + "\n";
  for (auto [a, b] : p.covers()) out += "le " + p.name(a) + " " + p.name(b) + "\n";
  return out;
}

// ---- cones, atoms, weights ------------------------------------------------

ElementSet upper_cone(const Poset& p, std::span<const ElementId> a) {
  return to_set(p.upper_cone(p.make_set(a)));
}

ElementSet lower_cone(const Poset& p, std::span<const ElementId> a) {
  return to_set(p.lower_cone(p.make_set(a)));
}

ElementSet atoms(const Poset& p) {
  p.require_bottom();
  return to_set(p.atom_bits());
}

std::size_t weight(const Poset& p, ElementId x) {
  p.require_bottom();
  return p.down(x).count_and(p.atom_bits());
}

std::size_t poset_weight(const Poset& p) {
  p.require_bottom();
  return weight(p, p.require_top());
}

// ---- complements ----------------------------------------------------------

ElementSet complements_of(const Poset& p, ElementId x) {
  p.require_bottom();
  p.require_top();
  ElementSet out;
  for (ElementId y = 0; y < p.size(); ++y)
    if (p.meet_is_bottom(x, y) && p.join_is_top(x, y)) out.push_back(y);
  return out;
}

std::optional<ElementId> pseudocomplement_of(const Poset& p, ElementId x) {
  p.require_bottom();
  Bitset perp(p.size());
  for (ElementId y = 0; y < p.size(); ++y)
    if (p.meet_is_bottom(x, y)) perp.set(y);
  std::optional<ElementId> found;
  for (std::size_t b = perp.find_first(); b != Bitset::npos; b = perp.find_next(b)) {
    if (p.down(b) == perp) {
      if (found) contract_violation("pseudocomplement is not unique");
      found = b;
    }
  }
  return found;
}

// ---- structural predicates ------------------------------------------------

DistributivityResult is_distributive(const Poset& p) {
  const std::size_t n = p.size();
  // lower_cone(upper_cone({b,c})) depends only on the pair; cache it while
  // the table stays small.
  const bool cached = n <= 512;
  std::vector<Bitset> pair_lu;
  if (cached) {
    pair_lu.resize(n * n);
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = b; c < n; ++c) {
        pair_lu[b * n + c] = p.lower_cone(p.up(b) & p.up(c));
        pair_lu[c * n + b] = pair_lu[b * n + c];
      }
  }
  auto lu = [&](ElementId b, ElementId c) {
    return cached ? pair_lu[b * n + c] : p.lower_cone(p.up(b) & p.up(c));
  };

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      const Bitset ab = p.down(a) & p.down(b);
      for (ElementId c = 0; c < n; ++c) {
        // ({a} u {b,c}^u)^l
        const Bitset lhs = p.down(a) & lu(b, c);
        // ({a,b}^l u {a,c}^l)^{ul}
        Bitset s = ab;
        s |= p.down(a) & p.down(c);
        const Bitset rhs = p.lower_cone(p.upper_cone(s));
        if (!(lhs == rhs)) return {false, std::array<ElementId, 3>{a, b, c}};
      }
    }
  return {true, std::nullopt};
}

BooleanResult is_boolean(const Poset& p) {
  BooleanResult r;
  if (!p.bounded()) {
    r.reason = BooleanFailure::not_bounded;
    return r;
  }
  // Complementedness is checked before distributivity: it is quadratic and
  // rejects most non-Boolean inputs long before the cubic cone check.
  for (ElementId x = 0; x < p.size(); ++x) {
    bool has = false;
    for (ElementId y = 0; y < p.size() && !has; ++y)
      has = p.meet_is_bottom(x, y) && p.join_is_top(x, y);
    if (!has) {
      r.reason = BooleanFailure::not_complemented;
      r.uncomplemented = x;
      return r;
    }
  }
  auto d = is_distributive(p);
  if (!d.distributive) {
    r.reason = BooleanFailure::not_distributive;
    r.witness = d.witness;
    return r;
  }
  r.boolean = true;
  return r;
}

namespace {

// Some c with 0 < c <= b and {a,c}^l = {0}.
bool has_disjoint_part(const Poset& p, ElementId a, ElementId b, ElementId zero) {
  const Bitset& below_b = p.down(b);
  for (std::size_t c = below_b.find_first(); c != Bitset::npos; c = below_b.find_next(c))
    if (c != zero && p.meet_is_bottom(a, c)) return true;
  return false;
}

}  // namespace

bool is_ssc(const Poset& p) {
  const ElementId zero = p.require_bottom();
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b = 0; b < p.size(); ++b)
      if (!p.leq(b, a) && !has_disjoint_part(p, a, b, zero)) return false;
  return true;
}

bool is_wssc(const Poset& p) {
  const ElementId zero = p.require_bottom();
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b = 0; b < p.size(); ++b)
      if (p.less(a, b) && !has_disjoint_part(p, a, b, zero)) return false;
  return true;
}

// ---- products -------------------------------------------------------------

ProductPoset direct_product(std::vector<Poset> factors) {
  if (factors.size() < 2)
    throw Error(ErrorCode::too_few_factors, "a direct product needs at least two factors");
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].bounded())
      throw Error(ErrorCode::unbounded_factor, "factor " + std::to_string(i + 1) + " is not bounded");

  std::size_t total = 1;
  for (const auto& f : factors) total *= f.size();

  std::vector<std::vector<ElementId>> coords;
  coords.reserve(total);
  std::vector<ElementId> cur(factors.size(), 0);
  for (std::size_t id = 0; id < total; ++id) {
    coords.push_back(cur);
    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++cur[i] < factors[i].size()) break;
      cur[i] = 0;
    }
  }

  std::vector<std::string> names;
  names.reserve(total);
  for (const auto& c : coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += factors[i].name(c[i]);
    }
    names.push_back(s + ")");
  }

  // Cover pairs suffice: raise one coordinate along one factor cover.
  std::vector<std::vector<std::pair<ElementId, ElementId>>> factor_covers;
  for (const auto& f : factors) factor_covers.push_back(f.covers());
  std::vector<std::size_t> stride(factors.size(), 1);
  for (std::size_t i = factors.size() - 1; i-- > 0;) stride[i] = stride[i + 1] * factors[i + 1].size();

  std::vector<std::pair<ElementId, ElementId>> le;
  for (std::size_t id = 0; id < total; ++id)
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (auto [a, b] : factor_covers[i])
        if (coords[id][i] == a) le.emplace_back(id, id - a * stride[i] + b * stride[i]);

  Poset carrier = Poset::from_relation(std::move(names), le);

  // With a unique atom per factor the carrier atoms are exactly the q_i.
  bool unique_atoms = std::all_of(factors.begin(), factors.end(),
                                  [](const Poset& f) { return f.atom_bits().count() == 1; });
  if (unique_atoms && carrier.atom_bits().count() != factors.size())
    contract_violation("product atoms differ from the coordinate atoms");

  return ProductPoset{std::move(factors), std::move(carrier), std::move(coords)};
}

}  // namespace posetcm
