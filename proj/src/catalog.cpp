#include "posetcm/catalog.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "posetcm/error.hpp"

namespace posetcm {

namespace {

std::string subset_name(unsigned mask, std::size_t n) {
  if (mask == 0) return "0";
  if (mask == (1u << n) - 1) return "1";
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

// Rank first, then lexicographic on the sorted member list.
bool subset_before(unsigned a, unsigned b) {
  int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
  if (ca != cb) return ca < cb;
  for (unsigned i = 0; i < 32; ++i) {
    bool ia = a >> i & 1u, ib = b >> i & 1u;
    if (ia != ib) return ia;
  }
  return false;
}

}  // namespace

Poset boolean_lattice(std::size_t n) {
  if (n < 1 || n > 12) throw Error(ErrorCode::bad_param, "boolean_lattice needs 1 <= n <= 12");
  std::vector<unsigned> masks(1u << n);
  for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), subset_before);
  std::vector<std::size_t> id_of(masks.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    id_of[masks[i]] = i;
    names.push_back(subset_name(masks[i], n));
  }
  std::vector<std::pair<ElementId, ElementId>> le;
  for (unsigned m : masks)
    for (std::size_t i = 0; i < n; ++i)
      if (!(m >> i & 1u)) le.emplace_back(id_of[m], id_of[m | (1u << i)]);
  return Poset::from_relation(std::move(names), le);
}

Poset chain(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::bad_param, "chain needs k >= 1");
  std::vector<std::string> names;
  names.push_back("0");
  for (std::size_t i = 1; i + 1 < k; ++i) names.push_back("c" + std::to_string(i));
  if (k > 1) names.push_back("1");
  std::vector<std::pair<ElementId, ElementId>> le;
  for (std::size_t i = 0; i + 1 < k; ++i) le.emplace_back(i, i + 1);
  return Poset::from_relation(std::move(names), le);
}

Poset atom_coatom(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::bad_param, "atom_coatom needs k >= 2");
  if (k == 2) return boolean_lattice(2);
  // 0, q1..qk, q1'..qk', 1 where qi' = [k] \ {i}
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i <= k; ++i) names.push_back("q" + std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) names.push_back("q" + std::to_string(i) + "'");
  names.push_back("1");
  const ElementId top = 2 * k + 1;
  std::vector<std::pair<ElementId, ElementId>> le;
  for (std::size_t i = 1; i <= k; ++i) {
    le.emplace_back(0, i);
    le.emplace_back(k + i, top);
    for (std::size_t j = 1; j <= k; ++j)
      if (i != j) le.emplace_back(i, k + j);
  }
  return Poset::from_relation(std::move(names), le);
}

Poset m_atoms(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::bad_param, "m_atoms needs k >= 1");
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i < k; ++i)
    names.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i + 1));
  names.push_back("1");
  std::vector<std::pair<ElementId, ElementId>> le;
  for (std::size_t i = 1; i <= k; ++i) {
    le.emplace_back(0, i);
    le.emplace_back(i, k + 1);
  }
  return Poset::from_relation(std::move(names), le);
}

Poset generate(std::string_view name, std::span<const long long> params) {
  auto one_param = [&]() -> std::size_t {
    if (params.size() != 1)
      throw Error(ErrorCode::bad_param, std::string(name) + " takes exactly one parameter");
    if (params[0] < 0) throw Error(ErrorCode::bad_param, "parameter must be nonnegative");
    return static_cast<std::size_t>(params[0]);
  };
  if (name == "boolean_lattice") return boolean_lattice(one_param());
  if (name == "chain") return chain(one_param());
  if (name == "atom_coatom") return atom_coatom(one_param());
  if (name == "m_atoms") return m_atoms(one_param());
  if (name == "chain_product") {
    std::vector<std::size_t> sizes;
    for (long long s : params) {
      if (s < 2) throw Error(ErrorCode::bad_param, "chain_product sizes must be >= 2");
      sizes.push_back(static_cast<std::size_t>(s));
    }
    return chain_product(sizes).carrier;
  }
  throw Error(ErrorCode::unknown_catalog_name, "unknown catalog entry '" + std::string(name) + "'");
}

ProductPoset chain_product(std::span<const std::size_t> sizes) {
  std::vector<Poset> factors;
  for (std::size_t s : sizes) {
    if (s < 2) throw Error(ErrorCode::bad_param, "chain sizes must be >= 2");
    factors.push_back(chain(s));
  }
  return direct_product(std::move(factors));
}

}  // namespace posetcm
