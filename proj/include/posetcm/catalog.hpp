#ifndef POSETCM_CATALOG_HPP
#define POSETCM_CATALOG_HPP

#include <cstddef>
#include <span>
#include <string_view>

#include "posetcm/poset.hpp"

namespace posetcm {

// Named poset families.
//   boolean_lattice(n)  power set of {1..n}, n >= 1
//   chain(k)            k-element chain, k >= 1
//   atom_coatom(k)      ranks {0,1,k-1,k} of 2^k, k >= 2
//   m_atoms(k)          0 < k pairwise incomparable atoms < 1, k >= 1
Poset boolean_lattice(std::size_t n);
Poset chain(std::size_t k);
Poset atom_coatom(std::size_t k);
Poset m_atoms(std::size_t k);

// Dispatch by catalog name; throws Error{unknown_catalog_name, bad_param}.
Poset generate(std::string_view name, std::span<const long long> params);

// Product of chains with the given sizes (each >= 2).
ProductPoset chain_product(std::span<const std::size_t> sizes);

}  // namespace posetcm

#endif
