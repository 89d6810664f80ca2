#include "posetcm/error.hpp"

namespace posetcm {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::duplicate_element: return "DuplicateElement";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::antisymmetry_violation: return "AntisymmetryViolation";
    case ErrorCode::no_bottom: return "NoBottom";
    case ErrorCode::no_top: return "NoTop";
    case ErrorCode::unknown_catalog_name: return "UnknownCatalogName";
    case ErrorCode::bad_param: return "BadParam";
    case ErrorCode::unbounded_factor: return "UnboundedFactor";
    case ErrorCode::too_few_factors: return "TooFewFactors";
    case ErrorCode::not_boolean: return "NotBoolean";
    case ErrorCode::fewer_than_two_atoms: return "FewerThanTwoAtoms";
    case ErrorCode::not_independent: return "NotIndependent";
    case ErrorCode::unknown_vertex: return "UnknownVertex";
    case ErrorCode::size_limit_exceeded: return "SizeLimitExceeded";
    case ErrorCode::empty_complex: return "EmptyComplex";
    case ErrorCode::empty_graph: return "EmptyGraph";
    case ErrorCode::not_a_face: return "NotAFace";
    case ErrorCode::pairs_dont_partition: return "PairsDontPartition";
    case ErrorCode::factor_has_zero_divisors: return "FactorHasZeroDivisors";
    case ErrorCode::not_ascending: return "NotAscending";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::indices_not_distinct_or_ordered: return "IndicesNotDistinctOrOrdered";
    case ErrorCode::need_equal_sizes_for_triple: return "NeedEqualSizesForTriple";
    case ErrorCode::wrong_arity: return "WrongArity";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::internal_error: return "InternalError";
  }
  return "Unknown";
}

void contract_violation(const std::string& what) {
  throw Error(ErrorCode::internal_error, "internal contract violated: " + what);
}

}  // namespace posetcm
