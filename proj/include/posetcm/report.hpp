#ifndef POSETCM_REPORT_HPP
#define POSETCM_REPORT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "posetcm/cm_certificate.hpp"
#include "posetcm/poset.hpp"

namespace posetcm {

struct AnalysisConfig {
  CmConfig caps;
  std::size_t workers = 1;
  bool verbose = false;
};

// `key: value` lines summarizing the order-theoretic structure.
std::string info_report(const Poset& p);

struct CheckReport {
  std::string text;
  // False when two routes that must agree disagree (a library bug).
  bool consistent = true;
};

// Well-covered, very well-covered, certificate path and Reisner oracle, with
// every implication between them cross-checked.
CheckReport check_report(const Poset& p, const AnalysisConfig& config);

// One vector of factor sizes per non-blank line, comma separated.
// Throws Error{syntax_error} naming the line.
std::vector<std::vector<std::size_t>> parse_size_vectors(std::string_view text);

// TSV over chain products, rows ordered by (length, sizes).
std::string sweep_tsv(std::vector<std::vector<std::size_t>> vectors, const AnalysisConfig& config);

}  // namespace posetcm

#endif
