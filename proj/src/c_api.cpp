#include "posetcm/posetcm.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "posetcm/catalog.hpp"
#include "posetcm/cm_certificate.hpp"
#include "posetcm/error.hpp"
#include "posetcm/independence_complex.hpp"
#include "posetcm/poset.hpp"
#include "posetcm/report.hpp"
#include "posetcm/zero_divisor_graph.hpp"

struct pcm_poset {
  std::shared_ptr<const posetcm::Poset> poset;
};

struct pcm_graph {
  std::shared_ptr<const posetcm::Poset> poset;  // keeps zdg.owner alive
  posetcm::ZdGraph zdg;
};

namespace {

thread_local std::string last_error;

pcm_status fail(pcm_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
pcm_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return PCM_OK;
  } catch (const posetcm::Error& e) {
    return fail(static_cast<pcm_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PCM_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(PCM_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(PCM_INTERNAL_ERROR, "unknown exception");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw posetcm::Error(posetcm::ErrorCode::invalid_argument, what);
}

posetcm::AnalysisConfig to_config(const pcm_config* cfg) {
  posetcm::AnalysisConfig c;
  if (!cfg) return c;
  require(cfg->max_vertices > 0 && cfg->max_homology_vertices > 0 && cfg->max_search_nodes > 0,
          "caps must be positive");
  require(cfg->workers > 0, "worker count must be at least 1");
  c.caps.max_vertices = cfg->max_vertices;
  c.caps.max_homology_vertices = cfg->max_homology_vertices;
  c.caps.max_search_nodes = cfg->max_search_nodes;
  c.workers = cfg->workers;
  c.verbose = cfg->verbose != 0;
  return c;
}

}  // namespace

static_assert(static_cast<int>(posetcm::ErrorCode::internal_error) == PCM_INTERNAL_ERROR);
static_assert(static_cast<int>(posetcm::ErrorCode::empty_graph) == PCM_EMPTY_GRAPH);

extern "C" {

void pcm_config_init(pcm_config* cfg) {
  if (!cfg) return;
  const posetcm::AnalysisConfig d;
  cfg->max_vertices = d.caps.max_vertices;
  cfg->max_homology_vertices = d.caps.max_homology_vertices;
  cfg->max_search_nodes = d.caps.max_search_nodes;
  cfg->workers = d.workers;
  cfg->verbose = d.verbose ? 1 : 0;
}

const char* pcm_status_name(pcm_status s) {
  if (s == PCM_OK) return "Ok";
  return posetcm::error_code_name(static_cast<posetcm::ErrorCode>(s));
}

const char* pcm_last_error_message(void) { return last_error.c_str(); }

void pcm_string_free(char* s) { std::free(s); }

pcm_status pcm_poset_parse(const char* text, size_t len, pcm_poset** out) {
  return guarded([&] {
    require(out && (text || len == 0), "null argument");
    *out = nullptr;
    auto p = std::make_shared<const posetcm::Poset>(posetcm::parse_poset(std::string_view(text ? text : "", len)));
    *out = new pcm_poset{std::move(p)};
  });
}

pcm_status pcm_poset_generate(const char* catalog, const long long* params, size_t n_params, pcm_poset** out) {
  return guarded([&] {
    require(out && catalog && (params || n_params == 0), "null argument");
    *out = nullptr;
    std::span<const long long> ps(params, n_params);
    auto p = std::make_shared<const posetcm::Poset>(posetcm::generate(catalog, ps));
    *out = new pcm_poset{std::move(p)};
  });
}

void pcm_poset_free(pcm_poset* p) { delete p; }

size_t pcm_poset_size(const pcm_poset* p) { return p ? p->poset->size() : 0; }

const char* pcm_poset_element_name(const pcm_poset* p, size_t id) {
  if (!p || id >= p->poset->size()) return nullptr;
  return p->poset->name(id).c_str();
}

pcm_status pcm_poset_find(const pcm_poset* p, const char* name, size_t* id) {
  return guarded([&] {
    require(p && name && id, "null argument");
    auto found = p->poset->find(name);
    if (!found) throw posetcm::Error(posetcm::ErrorCode::unknown_name, std::string("unknown element '") + name + "'");
    *id = *found;
  });
}

pcm_status pcm_poset_leq(const pcm_poset* p, size_t a, size_t b, int* result) {
  return guarded([&] {
    require(p && result, "null argument");
    if (a >= p->poset->size() || b >= p->poset->size())
      throw posetcm::Error(posetcm::ErrorCode::index_out_of_range, "element id out of range");
    *result = p->poset->leq(a, b) ? 1 : 0;
  });
}

pcm_status pcm_poset_atoms(const pcm_poset* p, size_t* ids, size_t cap, size_t* count) {
  return guarded([&] {
    require(p && count && (ids || cap == 0), "null argument");
    const auto at = posetcm::atoms(*p->poset);
    for (size_t i = 0; i < at.size() && i < cap; ++i) ids[i] = at[i];
    *count = at.size();
  });
}

pcm_status pcm_poset_weight(const pcm_poset* p, size_t id, size_t* weight) {
  return guarded([&] {
    require(p && weight, "null argument");
    if (id >= p->poset->size()) throw posetcm::Error(posetcm::ErrorCode::index_out_of_range, "element id out of range");
    *weight = posetcm::weight(*p->poset, id);
  });
}

pcm_status pcm_poset_is_boolean(const pcm_poset* p, int* result) {
  return guarded([&] {
    require(p && result, "null argument");
    *result = posetcm::is_boolean(*p->poset).boolean ? 1 : 0;
  });
}

pcm_status pcm_poset_format(const pcm_poset* p, char** text) {
  return guarded([&] {
    require(p && text, "null argument");
    *text = duplicate(posetcm::format_poset(*p->poset));
  });
}

pcm_status pcm_info_report(const pcm_poset* p, char** text) {
  return guarded([&] {
    require(p && text, "null argument");
    *text = duplicate(posetcm::info_report(*p->poset));
  });
}

pcm_status pcm_graph_build(const pcm_poset* p, pcm_graph** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = nullptr;
    auto g = std::make_unique<pcm_graph>();
    g->poset = p->poset;
    g->zdg = posetcm::zero_divisor_graph(*g->poset);
    *out = g.release();
  });
}

void pcm_graph_free(pcm_graph* g) { delete g; }

size_t pcm_graph_vertex_count(const pcm_graph* g) { return g ? g->zdg.graph.vertex_count() : 0; }

size_t pcm_graph_edge_count(const pcm_graph* g) { return g ? g->zdg.graph.edge_count() : 0; }

pcm_status pcm_graph_vertex_element(const pcm_graph* g, size_t v, size_t* element) {
  return guarded([&] {
    require(g && element, "null argument");
    if (v >= g->zdg.graph.vertex_count()) throw posetcm::Error(posetcm::ErrorCode::unknown_vertex, "vertex out of range");
    *element = g->zdg.element_of(v);
  });
}

pcm_status pcm_graph_adjacent(const pcm_graph* g, size_t u, size_t v, int* result) {
  return guarded([&] {
    require(g && result, "null argument");
    const size_t n = g->zdg.graph.vertex_count();
    if (u >= n || v >= n) throw posetcm::Error(posetcm::ErrorCode::unknown_vertex, "vertex out of range");
    *result = g->zdg.graph.adjacent(u, v) ? 1 : 0;
  });
}

pcm_status pcm_graph_dot(const pcm_graph* g, char** text) {
  return guarded([&] {
    require(g && text, "null argument");
    *text = duplicate(posetcm::to_dot(g->zdg));
  });
}

pcm_status pcm_graph_well_covered(const pcm_graph* g, const pcm_config* cfg, int* well_covered,
                                  int* very_well_covered) {
  return guarded([&] {
    require(g && well_covered, "null argument");
    const auto c = to_config(cfg);
    const auto complex = posetcm::independence_complex(g->zdg.graph, c.caps.max_vertices);
    *well_covered = posetcm::is_well_covered(complex) ? 1 : 0;
    if (very_well_covered) *very_well_covered = posetcm::is_very_well_covered(complex) ? 1 : 0;
  });
}

pcm_status pcm_graph_edge_ideal(const pcm_graph* g, pcm_dialect dialect, char** text) {
  return guarded([&] {
    require(g && text, "null argument");
    require(dialect == PCM_DIALECT_M2 || dialect == PCM_DIALECT_SINGULAR, "unknown dialect");
    const auto d = dialect == PCM_DIALECT_M2 ? posetcm::IdealDialect::m2 : posetcm::IdealDialect::singular;
    *text = duplicate(posetcm::export_edge_ideal(g->zdg.graph, d).render());
  });
}

pcm_status pcm_certify(const pcm_poset* p, const pcm_config* cfg, pcm_verdict* verdict, char** json) {
  return guarded([&] {
    require(p && verdict, "null argument");
    if (json) *json = nullptr;
    const auto c = to_config(cfg);
    const auto r = posetcm::is_cohen_macaulay(*p->poset, c.caps);
    switch (r.verdict) {
      case posetcm::CmVerdict::cm: *verdict = PCM_CM; break;
      case posetcm::CmVerdict::not_cm: *verdict = PCM_NOT_CM; break;
      case posetcm::CmVerdict::inconclusive: *verdict = PCM_INCONCLUSIVE; break;
    }
    if (json && r.certificate) {
      const auto g = posetcm::zero_divisor_graph(*p->poset);
      *json = duplicate(posetcm::certificate_json(g.graph, *r.certificate));
    }
  });
}

pcm_status pcm_reisner(const pcm_poset* p, const pcm_config* cfg, int* cohen_macaulay) {
  return guarded([&] {
    require(p && cohen_macaulay, "null argument");
    const auto c = to_config(cfg);
    const auto g = posetcm::zero_divisor_graph(*p->poset);
    if (g.graph.vertex_count() == 0) throw posetcm::Error(posetcm::ErrorCode::empty_graph, "zero-divisor graph is empty");
    const auto complex = posetcm::independence_complex(g.graph, c.caps.max_vertices);
    *cohen_macaulay = posetcm::reisner_cm(complex.complex, c.caps.max_homology_vertices).cohen_macaulay ? 1 : 0;
  });
}

pcm_status pcm_check_report(const pcm_poset* p, const pcm_config* cfg, int* consistent, char** text) {
  return guarded([&] {
    require(p && consistent && text, "null argument");
    const auto r = posetcm::check_report(*p->poset, to_config(cfg));
    *consistent = r.consistent ? 1 : 0;
    *text = duplicate(r.text);
  });
}

pcm_status pcm_sweep_tsv(const char* sizes_text, size_t len, const pcm_config* cfg, char** text) {
  return guarded([&] {
    require((sizes_text || len == 0) && text, "null argument");
    const auto c = to_config(cfg);
    auto vectors = posetcm::parse_size_vectors(std::string_view(sizes_text ? sizes_text : "", len));
    *text = duplicate(posetcm::sweep_tsv(std::move(vectors), c));
  });
}

}  // extern "C"
