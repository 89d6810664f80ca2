#ifndef POSETCM_ERROR_HPP
#define POSETCM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace posetcm {

// Every failure the library reports carries one of these codes. The C API
// maps them one-to-one onto pcm_status values.
enum class ErrorCode {
  syntax_error = 1,
  duplicate_element,
  unknown_name,
  antisymmetry_violation,
  no_bottom,
  no_top,
  unknown_catalog_name,
  bad_param,
  unbounded_factor,
  too_few_factors,
  not_boolean,
  fewer_than_two_atoms,
  not_independent,
  unknown_vertex,
  size_limit_exceeded,
  empty_complex,
  empty_graph,
  not_a_face,
  pairs_dont_partition,
  factor_has_zero_divisors,
  not_ascending,
  index_out_of_range,
  indices_not_distinct_or_ordered,
  need_equal_sizes_for_triple,
  wrong_arity,
  invalid_argument,
  internal_error,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Thrown when one of the library's own internal invariants fails.
// Reaching this is a bug, never an input problem.
[[noreturn]] void contract_violation(const std::string& what);

}  // namespace posetcm

#endif
