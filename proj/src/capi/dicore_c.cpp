#include "dicore/dicore.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "dicore/bounds.hpp"
#include "dicore/density.hpp"
#include "dicore/digraph.hpp"
#include "dicore/digraph_io.hpp"
#include "dicore/errors.hpp"
#include "dicore/experiments.hpp"
#include "dicore/homomorphism.hpp"
#include "dicore/random_model.hpp"

struct dicore_digraph {
  dicore::Digraph graph;
};

namespace {

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

dicore_status fail(dicore_status status, const std::string& message, std::size_t line = 0) {
  last_error = message;
  last_error_line = line;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
dicore_status guarded(Body&& body) {
  try {
    body();
    return DICORE_OK;
  } catch (const BufferTooSmall& e) {
    return fail(DICORE_ERR_BUFFER_TOO_SMALL, e.what());
  } catch (const dicore::ParseError& e) {
    return fail(DICORE_ERR_PARSE, e.what(), e.line());
  } catch (const dicore::LimitExceeded& e) {
    return fail(DICORE_ERR_LIMIT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(DICORE_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DICORE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DICORE_ERR_INTERNAL, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(DICORE_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(DICORE_ERR_INTERNAL, e.what());
  }
}

void require(const void* ptr, const char* name) {
  if (ptr == nullptr) throw std::invalid_argument(std::string(name) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dicore_digraph* wrap(dicore::Digraph g) { return new dicore_digraph{std::move(g)}; }

void copy_image(const dicore::VertexMap& map, uint32_t* out) {
  if (out != nullptr) std::copy(map.image().begin(), map.image().end(), out);
}

dicore::VertexMap map_from(const dicore::Digraph& from, const dicore::Digraph& to, const uint32_t* image) {
  require(image, "image");
  return dicore::VertexMap(from.vertex_count(), to.vertex_count(),
                           std::vector<dicore::Vertex>(image, image + from.vertex_count()));
}

dicore_search_outcome outcome_of(dicore::SearchStatus s) {
  switch (s) {
    case dicore::SearchStatus::Found: return DICORE_FOUND;
    case dicore::SearchStatus::NotFound: return DICORE_NOT_FOUND;
    case dicore::SearchStatus::BudgetExceeded: return DICORE_BUDGET_EXCEEDED;
  }
  return DICORE_NOT_FOUND;
}

}  // namespace

extern "C" {

const char* dicore_version(void) { return "1.0.0"; }

const char* dicore_status_name(dicore_status status) {
  switch (status) {
    case DICORE_OK: return "ok";
    case DICORE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DICORE_ERR_OUT_OF_RANGE: return "out of range";
    case DICORE_ERR_PARSE: return "parse error";
    case DICORE_ERR_IO: return "i/o error";
    case DICORE_ERR_LIMIT: return "size limit exceeded";
    case DICORE_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case DICORE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dicore_last_error(void) { return last_error.c_str(); }

size_t dicore_last_error_line(void) { return last_error_line; }

void dicore_string_free(char* s) { std::free(s); }

dicore_status dicore_digraph_new(size_t n, dicore_digraph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(dicore::Digraph(n));
  });
}

dicore_status dicore_digraph_from_arcs(size_t n, const uint32_t* tails, const uint32_t* heads, size_t m,
                                       dicore_digraph** out) {
  return guarded([&] {
    require(out, "out");
    if (m > 0) {
      require(tails, "tails");
      require(heads, "heads");
    }
    dicore::DigraphBuilder b(n);
    for (size_t i = 0; i < m; ++i) b.add_arc(tails[i], heads[i]);
    *out = wrap(std::move(b).freeze());
  });
}

dicore_status dicore_digraph_parse(const char* text, dicore_digraph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(dicore::parse_digraph(text));
  });
}

dicore_status dicore_digraph_read_file(const char* path, dicore_digraph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(dicore::read_digraph_file(path));
  });
}

dicore_status dicore_digraph_format(const dicore_digraph* d, char** text_out) {
  return guarded([&] {
    require(d, "digraph");
    require(text_out, "text_out");
    *text_out = copy_string(dicore::format_digraph(d->graph));
  });
}

void dicore_digraph_free(dicore_digraph* d) { delete d; }

size_t dicore_digraph_vertex_count(const dicore_digraph* d) { return d == nullptr ? 0 : d->graph.vertex_count(); }

size_t dicore_digraph_arc_count(const dicore_digraph* d) { return d == nullptr ? 0 : d->graph.arc_count(); }

dicore_status dicore_digraph_has_arc(const dicore_digraph* d, uint32_t u, uint32_t v, int* out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = d->graph.has_arc(u, v) ? 1 : 0;
  });
}

dicore_status dicore_digraph_is_acyclic(const dicore_digraph* d, int* out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = d->graph.is_acyclic() ? 1 : 0;
  });
}

dicore_status dicore_sample(size_t n, double p, uint64_t seed, uint64_t stream, dicore_digraph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(dicore::sample(n, p, dicore::Seed{seed, stream}));
  });
}

dicore_status dicore_probability_mass(const dicore_digraph* d, double p, double* mass, double* log_mass) {
  return guarded([&] {
    require(d, "digraph");
    const auto m = dicore::probability_mass(d->graph, p);
    if (mass != nullptr) *mass = m.mass;
    if (log_mass != nullptr) *log_mass = m.log_mass;
  });
}

dicore_status dicore_max_density(const dicore_digraph* d, dicore_density_method method, dicore_density* out,
                                 uint32_t* witness, size_t witness_capacity) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    dicore::DensityResult r;
    switch (method) {
      case DICORE_DENSITY_EXACT: r = dicore::max_density_exact(d->graph); break;
      case DICORE_DENSITY_BRUTE: r = dicore::max_density_bruteforce(d->graph); break;
      default: throw std::invalid_argument("unknown density method");
    }
    if (witness != nullptr && witness_capacity < r.witness.size()) {
      throw BufferTooSmall("witness buffer holds " + std::to_string(witness_capacity) + " vertices, need " +
                           std::to_string(r.witness.size()));
    }
    const auto value = r.value();
    out->numerator = static_cast<uint64_t>(value.num());
    out->denominator = static_cast<uint64_t>(value.den());
    out->witness_arcs = r.arcs;
    out->witness_size = r.vertices;
    if (witness != nullptr) std::copy(r.witness.begin(), r.witness.end(), witness);
  });
}

dicore_status dicore_threshold_probability(const dicore_digraph* pattern, size_t n, double* out) {
  return guarded([&] {
    require(pattern, "pattern");
    require(out, "out");
    *out = dicore::threshold_probability(pattern->graph, n);
  });
}

dicore_status dicore_verify_acyclic_hom(const dicore_digraph* from, const dicore_digraph* to, const uint32_t* image,
                                        int* out) {
  return guarded([&] {
    require(from, "from");
    require(to, "to");
    require(out, "out");
    *out = dicore::verify_acyclic_hom(from->graph, to->graph, map_from(from->graph, to->graph, image)) ? 1 : 0;
  });
}

dicore_status dicore_find_acyclic_hom(const dicore_digraph* from, const dicore_digraph* to, uint64_t budget,
                                      dicore_search_outcome* outcome, uint32_t* image, uint64_t* nodes) {
  return guarded([&] {
    require(from, "from");
    require(to, "to");
    require(outcome, "outcome");
    const auto r = dicore::find_acyclic_hom(from->graph, to->graph, budget);
    *outcome = outcome_of(r.status);
    if (r.map) copy_image(*r.map, image);
    if (nodes != nullptr) *nodes = r.nodes;
  });
}

dicore_status dicore_is_core(const dicore_digraph* d, uint64_t budget, dicore_core_verdict* verdict, uint32_t* witness,
                             uint64_t* nodes) {
  return guarded([&] {
    require(d, "digraph");
    require(verdict, "verdict");
    const auto v = dicore::is_core(d->graph, budget);
    switch (v.status) {
      case dicore::CoreStatus::Core: *verdict = DICORE_CORE; break;
      case dicore::CoreStatus::NotCore: *verdict = DICORE_NOT_CORE; break;
      case dicore::CoreStatus::Unknown: *verdict = DICORE_UNKNOWN; break;
    }
    if (v.witness) copy_image(*v.witness, witness);
    if (nodes != nullptr) *nodes = v.nodes;
  });
}

dicore_status dicore_is_automorphism(const dicore_digraph* d, const uint32_t* image, int* out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = dicore::is_automorphism(d->graph, map_from(d->graph, d->graph, image)) ? 1 : 0;
  });
}

dicore_status dicore_contains(const dicore_digraph* host, const dicore_digraph* pattern, uint64_t budget,
                              dicore_search_outcome* outcome, uint32_t* embedding, uint64_t* nodes) {
  return guarded([&] {
    require(host, "host");
    require(pattern, "pattern");
    require(outcome, "outcome");
    const auto r = dicore::subdigraph_contains(host->graph, pattern->graph, budget);
    *outcome = outcome_of(r.status);
    if (r.map) copy_image(*r.map, embedding);
    if (nodes != nullptr) *nodes = r.nodes;
  });
}

double dicore_chernoff_rate(double x) { return dicore::chernoff_rate(x); }

dicore_status dicore_chernoff_upper(double lambda, double t, dicore_tail_bound* out) {
  return guarded([&] {
    require(out, "out");
    const auto b = dicore::chernoff_upper(lambda, t);
    *out = {b.rate_bound, b.quadratic_bound};
  });
}

dicore_status dicore_chernoff_lower(double lambda, double t, dicore_tail_bound* out) {
  return guarded([&] {
    require(out, "out");
    const auto b = dicore::chernoff_lower(lambda, t);
    *out = {b.rate_bound, b.quadratic_bound};
  });
}

dicore_status dicore_corollary_bound(double eps, double mean, dicore_relative_bound* out) {
  return guarded([&] {
    require(out, "out");
    const auto b = dicore::corollary_bound(eps, mean);
    out->general = b.general;
    out->has_simplified = b.simplified.has_value() ? 1 : 0;
    out->simplified = b.simplified.value_or(0.0);
  });
}

size_t dicore_experiment_count(void) { return dicore::experiments::experiment_ids().size(); }

const char* dicore_experiment_id(size_t index) {
  const auto& ids = dicore::experiments::experiment_ids();
  return index < ids.size() ? ids[index].c_str() : nullptr;
}

dicore_status dicore_experiment_run(const char* id, const char* config_json, char** csv_out) {
  return guarded([&] {
    require(id, "id");
    require(csv_out, "csv_out");
    const auto spec = config_json == nullptr ? dicore::experiments::default_spec(id)
                                             : dicore::experiments::spec_from_json(id, config_json);
    *csv_out = copy_string(dicore::experiments::run_csv(spec));
  });
}

}  // extern "C"
