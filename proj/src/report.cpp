#include "posetcm/report.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>

#include "posetcm/catalog.hpp"
#include "posetcm/error.hpp"
#include "posetcm/homology.hpp"
#include "posetcm/independence_complex.hpp"
#include "posetcm/product.hpp"
#include "posetcm/zero_divisor_graph.hpp"

namespace posetcm {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_names(const Poset& p, const ElementSet& ids, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += sep;
    s += p.name(ids[i]);
  }
  return s;
}

std::string face_text(const SimplicialComplex& c, const VertexList& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += c.names[f[i]];
  }
  return s + "}";
}

std::string boolean_line(const Poset& p, const BooleanResult& b) {
  if (b.boolean) return "yes";
  switch (b.reason) {
    case BooleanFailure::not_bounded: return "no (not bounded)";
    case BooleanFailure::not_complemented: return "no (no complement for " + p.name(*b.uncomplemented) + ")";
    case BooleanFailure::not_distributive: {
      const auto& w = *b.witness;
      return "no (distributivity witness " + p.name(w[0]) + "," + p.name(w[1]) + "," + p.name(w[2]) + ")";
    }
    case BooleanFailure::none: break;
  }
  return "no";
}

}  // namespace

std::string info_report(const Poset& p) {
  std::ostringstream out;
  out << "elements: " << p.size() << "\n";
  out << "bounded: " << yes_no(p.bounded()) << "\n";
  if (p.bottom()) {
    const ElementSet at = atoms(p);
    out << "atoms: " << at.size();
    if (!at.empty()) out << " (" << join_names(p, at, " ") << ")";
    out << "\n";
  } else {
    out << "atoms: n/a (no least element)\n";
  }
  if (p.bounded()) out << "weight: " << poset_weight(p) << "\n";
  else out << "weight: n/a\n";

  const DistributivityResult d = is_distributive(p);
  out << "distributive: ";
  if (d.distributive) out << "yes\n";
  else out << "no (witness " << p.name((*d.witness)[0]) << "," << p.name((*d.witness)[1]) << ","
           << p.name((*d.witness)[2]) << ")\n";

  out << "boolean: " << boolean_line(p, is_boolean(p)) << "\n";
  if (p.bottom()) {
    out << "ssc: " << yes_no(is_ssc(p)) << "\n";
    out << "wssc: " << yes_no(is_wssc(p)) << "\n";
    out << "zero-divisors: " << zero_divisors(p).size() << "\n";
  } else {
    out << "ssc: n/a\nwssc: n/a\nzero-divisors: n/a\n";
  }
  return out.str();
}

CheckReport check_report(const Poset& p, const AnalysisConfig& config) {
  CheckReport r;
  std::ostringstream out;
  std::vector<std::string> disagreements;

  const BooleanResult boolean = is_boolean(p);
  out << "elements: " << p.size() << "\n";
  out << "boolean: " << boolean_line(p, boolean) << "\n";

  const ZdGraph g = zero_divisor_graph(p);
  out << "vertices: " << g.graph.vertex_count() << "\n";
  out << "edges: " << g.graph.edge_count() << "\n";
  if (g.graph.vertex_count() == 0) {
    out << "well-covered: n/a (empty graph)\n";
    out << "CM: n/a (empty graph)\n";
    out << "consistent: yes\n";
    r.text = out.str();
    return r;
  }

  const bool boolean_with_atoms = boolean.boolean && p.atom_bits().count() >= 2;
  if (boolean_with_atoms) {
    if (!check_unique_complementation(p, g).pass) disagreements.push_back("unique graph complementation");
    if (!check_atom_end_lemma(p, g).pass) disagreements.push_back("atom/end correspondence");
  }

  // facet enumeration
  std::optional<IndependenceComplex> complex;
  std::optional<bool> well, very;
  try {
    complex = independence_complex(g.graph, config.caps.max_vertices);
    well = is_well_covered(*complex);
    very = is_very_well_covered(*complex);
    out << "facets: " << complex->facets().size() << "\n";
    out << "well-covered: " << yes_no(*well) << "\n";
    out << "very-well-covered: " << yes_no(*very) << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::size_limit_exceeded) throw;
    out << "facets: skipped (" << e.what() << ")\n";
    out << "well-covered: skipped\n";
    out << "very-well-covered: skipped\n";
  }
  if (boolean_with_atoms && well && (!*well || !*very)) disagreements.push_back("Boolean poset not very well-covered");

  // certificate route
  const CmResult cm = is_cohen_macaulay(p, config.caps);
  out << "CM(MY): ";
  if (cm.path == CmPath::homology_oracle) {
    out << "not applicable (not very well-covered)\n";
  } else {
    out << verdict_name(cm.verdict) << " [" << path_name(cm.path) << "]";
    if (!cm.detail.empty()) out << " " << cm.detail;
    out << "\n";
  }
  if (cm.certificate && !cm.certificate->all_pass()) disagreements.push_back("certificate fails its own conditions");
  if (cm.certificate && well && !*well) disagreements.push_back("certificate on a graph that is not well-covered");
  if (boolean_with_atoms && cm.verdict != CmVerdict::cm) disagreements.push_back("Boolean poset not certified CM");
  if (cm.stratum_order_valid && !*cm.stratum_order_valid)
    out << "note: weight-ordered labeling needed reordering for (e)\n";

  // homology oracle
  std::optional<bool> reisner;
  if (complex) {
    try {
      const ReisnerResult rr = reisner_cm(complex->complex, config.caps.max_homology_vertices, config.verbose);
      reisner = rr.cohen_macaulay;
      out << "CM(Reisner): " << yes_no(rr.cohen_macaulay);
      if (rr.witness)
        out << " (witness face " << face_text(complex->complex, rr.witness->first) << ", dimension "
            << rr.witness->second << ")";
      out << "\n";
      if (config.verbose) {
        out << "face\tlink-dim\tbetti\n";
        for (const auto& row : rr.table) {
          out << face_text(complex->complex, row.face) << "\t" << row.link_dimension << "\t";
          for (std::size_t i = 0; i < row.homology.betti.size(); ++i) out << (i ? "," : "") << row.homology.betti[i];
          out << "\n";
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::size_limit_exceeded) throw;
      out << "CM(Reisner): skipped (" << e.what() << ")\n";
    }
  } else {
    out << "CM(Reisner): skipped (facet enumeration skipped)\n";
  }

  if (reisner && cm.verdict != CmVerdict::inconclusive && *reisner != (cm.verdict == CmVerdict::cm))
    disagreements.push_back("certificate route and Reisner oracle disagree");
  if (reisner && *reisner && well && !*well) disagreements.push_back("Reisner CM but not well-covered");

  std::string overall = verdict_name(cm.verdict);
  if (cm.verdict == CmVerdict::inconclusive && reisner) overall = yes_no(*reisner);
  out << "CM: " << overall << "\n";

  r.consistent = disagreements.empty();
  out << "consistent: " << yes_no(r.consistent) << "\n";
  for (const auto& d : disagreements) out << "disagreement: " << d << "\n";
  r.text = out.str();
  return r;
}

std::vector<std::vector<std::size_t>> parse_size_vectors(std::string_view text) {
  std::vector<std::vector<std::size_t>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::vector<std::size_t> v;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto b = field.find_first_not_of(" \t\r");
      const auto e = field.find_last_not_of(" \t\r");
      if (b == std::string::npos) throw Error(ErrorCode::syntax_error, where + "empty size");
      const std::string tok = field.substr(b, e - b + 1);
      if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
        throw Error(ErrorCode::syntax_error, where + "bad size '" + tok + "'");
      const std::size_t s = std::stoul(tok);
      if (s < 2) throw Error(ErrorCode::syntax_error, where + "factor sizes must be >= 2");
      v.push_back(s);
    }
    if (v.size() < 2) throw Error(ErrorCode::syntax_error, where + "need at least two factor sizes");
    if (!std::is_sorted(v.begin(), v.end()))
      throw Error(ErrorCode::syntax_error, where + "factor sizes must be ascending");
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::string sweep_row(const std::vector<std::size_t>& sizes, const AnalysisConfig& config) {
  std::vector<Poset> factors;
  for (std::size_t s : sizes) factors.push_back(chain(s));
  const auto a = validate_factors(std::move(factors));

  std::string size_text;
  for (std::size_t i = 0; i < sizes.size(); ++i) size_text += (i ? "," : "") + std::to_string(sizes[i]);

  std::string triple = "-", well, cm, note;
  if (a->arity() == 2) {
    const BipartiteReport b = bipartite_case(*a);
    well = yes_no(b.well_covered);
    cm = yes_no(b.cohen_macaulay);
    note = "K_{" + std::to_string(b.left) + "," + std::to_string(b.right) + "}";
  } else {
    triple = std::to_string(j_triple(*a, 1, 2, 3).size());
    const WellCoveredVerdict wc = well_covered_verdict(*a, config.caps.max_vertices);
    well = yes_no(wc.enumerated.value_or(wc.well_covered));
    if (!wc.enumerated) note = "unverified-by-enumeration";
    cm = verdict_name(is_cohen_macaulay(a->carrier(), config.caps).verdict);
  }
  std::ostringstream row;
  row << size_text << "\t" << a->dense().size() << "\t" << j_single(*a, 1).size() << "\t" << triple << "\t" << well
      << "\t" << cm << "\t" << yes_no(is_boolean_lattice(a->carrier())) << "\t" << note << "\n";
  return row.str();
}

}  // namespace

std::string sweep_tsv(std::vector<std::vector<std::size_t>> vectors, const AnalysisConfig& config) {
  std::sort(vectors.begin(), vectors.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<std::string> rows(vectors.size());
  const std::size_t workers = std::max<std::size_t>(1, config.workers);
  for (std::size_t start = 0; start < vectors.size(); start += workers) {
    std::vector<std::future<std::string>> batch;
    for (std::size_t i = start; i < std::min(vectors.size(), start + workers); ++i)
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 [&, i] { return sweep_row(vectors[i], config); }));
    for (std::size_t i = 0; i < batch.size(); ++i) rows[start + i] = batch[i].get();
  }
  std::string out = "sizes\tdense\tj1\ttriple\twell_covered\tcm\tboolean_lattice\tnote\n";
  for (const auto& r : rows) out += r;
  return out;
}

}  // namespace posetcm
