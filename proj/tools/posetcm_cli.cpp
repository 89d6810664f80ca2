// posetcm: command-line front end over the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "posetcm/posetcm.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_inconsistent = 1;
constexpr int exit_input = 2;

struct Failure {
  int code;
  std::string message;
};

void check(pcm_status s) {
  if (s == PCM_OK) return;
  const int code = s == PCM_INTERNAL_ERROR ? exit_inconsistent : exit_input;
  throw Failure{code, std::string(pcm_status_name(s)) + ": " + pcm_last_error_message()};
}

struct PosetHandle {
  pcm_poset* p = nullptr;
  ~PosetHandle() { pcm_poset_free(p); }
};

struct GraphHandle {
  pcm_graph* g = nullptr;
  ~GraphHandle() { pcm_graph_free(g); }
};

struct OwnedText {
  char* s = nullptr;
  ~OwnedText() { pcm_string_free(s); }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{exit_input, "cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), {}};
}

void load(const std::string& path, PosetHandle& h) {
  const std::string text = read_input(path);
  check(pcm_poset_parse(text.data(), text.size(), &h.p));
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out || !(out << text)) throw Failure{exit_input, "cannot write '" + output + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of finite posets and Cohen-Macaulay checks"};
  app.require_subcommand(1);

  pcm_config cfg;
  pcm_config_init(&cfg);
  std::string input, output = "-", dialect = "m2", catalog;
  std::vector<long long> params;
  bool dot = false;

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", cfg.max_vertices, "Facet enumeration vertex cap")
        ->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--max-homology-vertices", cfg.max_homology_vertices, "Homology oracle vertex cap")
        ->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--max-search-nodes", cfg.max_search_nodes, "Relabeling search node cap")
        ->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto add_io = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", input, what)->required();
    sub->add_option("-o,--output", output, "Output path, - for stdout");
  };

  auto* info = app.add_subcommand("info", "Order-theoretic summary of a poset file");
  add_io(info, "Poset file, - for stdin");

  auto* zdg = app.add_subcommand("zdg", "Zero-divisor graph");
  add_io(zdg, "Poset file, - for stdin");
  zdg->add_flag("--dot", dot, "Emit Graphviz DOT (the default and only format)");

  auto* chk = app.add_subcommand("check", "Well-covered and Cohen-Macaulay verdicts, cross-checked");
  add_io(chk, "Poset file, - for stdin");
  add_caps(chk);
  chk->add_flag("-v,--verbose", cfg.verbose, "Print the per-face link homology table");

  auto* cert = app.add_subcommand("cert", "Certificate JSON for a Cohen-Macaulay verdict");
  add_io(cert, "Poset file, - for stdin");
  add_caps(cert);

  auto* exp = app.add_subcommand("export", "Edge ideal as a computer algebra script");
  add_io(exp, "Poset file, - for stdin");
  exp->add_option("--dialect", dialect, "Script dialect")->check(CLI::IsMember({"m2", "singular"}))
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "TSV sweep over chain products");
  add_io(sweep, "Factor-size file, one comma-separated vector per line");
  add_caps(sweep);
  sweep->add_option("-j,--workers", cfg.workers, "Parallel workers")->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Write a catalog poset as a poset file");
  gen->add_option("catalog", catalog, "boolean_lattice, chain, atom_coatom, m_atoms, chain_product")->required();
  gen->add_option("params", params, "Integer parameters");
  gen->add_option("-o,--output", output, "Output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    PosetHandle poset;
    OwnedText text;
    if (*gen) {
      check(pcm_poset_generate(catalog.c_str(), params.data(), params.size(), &poset.p));
      check(pcm_poset_format(poset.p, &text.s));
      emit(text.s, output);
      return exit_ok;
    }
    if (*sweep) {
      const std::string sizes = read_input(input);
      check(pcm_sweep_tsv(sizes.data(), sizes.size(), &cfg, &text.s));
      emit(text.s, output);
      return exit_ok;
    }

    load(input, poset);
    if (*info) {
      check(pcm_info_report(poset.p, &text.s));
      emit(text.s, output);
    } else if (*zdg) {
      GraphHandle g;
      check(pcm_graph_build(poset.p, &g.g));
      check(pcm_graph_dot(g.g, &text.s));
      emit(text.s, output);
    } else if (*exp) {
      GraphHandle g;
      check(pcm_graph_build(poset.p, &g.g));
      check(pcm_graph_edge_ideal(g.g, dialect == "m2" ? PCM_DIALECT_M2 : PCM_DIALECT_SINGULAR, &text.s));
      emit(text.s, output);
    } else if (*cert) {
      pcm_verdict verdict;
      check(pcm_certify(poset.p, &cfg, &verdict, &text.s));
      if (text.s) emit(text.s, output);
      else
        emit(std::string("{\n  \"verdict\": \"") +
                 (verdict == PCM_NOT_CM ? "no" : "inconclusive") + "\"\n}\n",
             output);
    } else if (*chk) {
      int consistent = 0;
      check(pcm_check_report(poset.p, &cfg, &consistent, &text.s));
      emit(text.s, output);
      return consistent ? exit_ok : exit_inconsistent;
    }
    return exit_ok;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
}
