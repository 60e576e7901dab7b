#include "neumaier/neumaier.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "neumaier/arith.hpp"
#include "neumaier/coherent.hpp"
#include "neumaier/constructions.hpp"
#include "neumaier/cyclotomy.hpp"
#include "neumaier/error.hpp"
#include "neumaier/graph_io.hpp"
#include "neumaier/regularity.hpp"
#include "neumaier/search.hpp"

struct nm_graph {
  neumaier::Graph g;
};

struct nm_closure {
  neumaier::CoherentConfiguration c;
};

namespace {

thread_local std::string last_error;

nm_status fail(nm_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class Fn>
nm_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return NM_OK;
  } catch (const neumaier::Error& e) {
    return fail(static_cast<nm_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NM_ERR_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(NM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NM_ERR_INTERNAL, "unknown failure");
  }
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw neumaier::InvalidArgument(std::string(what) + " must not be null");
}

nm_graph* wrap(neumaier::Graph g) { return new nm_graph{std::move(g)}; }

}  // namespace

extern "C" {

const char* nm_version(void) { return NEUMAIER_VERSION; }
const char* nm_last_error(void) { return last_error.c_str(); }
void nm_string_free(char* s) { std::free(s); }

nm_status nm_graph_read(const char* path, nm_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(neumaier::read_graph_file(path));
  });
}

nm_status nm_graph_parse(const char* text, nm_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(neumaier::parse_graph(text));
  });
}

nm_status nm_graph_write(const nm_graph* g, const char* path, const char* format) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    const auto f = format ? neumaier::format_from_name(format) : neumaier::format_for_path(path);
    neumaier::write_graph_file(path, g->g, f);
  });
}

nm_status nm_graph_serialize(const nm_graph* g, const char* format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto f = format ? neumaier::format_from_name(format) : neumaier::GraphFormat::Json;
    *out = dup(neumaier::write_graph(g->g, f));
  });
}

size_t nm_graph_vertex_count(const nm_graph* g) { return g ? g->g.order() : 0; }
size_t nm_graph_edge_count(const nm_graph* g) { return g ? g->g.edge_count() : 0; }
void nm_graph_free(nm_graph* g) { delete g; }

nm_status nm_gamma_build(uint32_t m, uint32_t q1, uint32_t q2, size_t alpha1_position, size_t alpha2_position,
                         nm_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(neumaier::gamma(neumaier::GammaSpec::make(m, q1, q2, alpha1_position, alpha2_position)));
  });
}

nm_status nm_gk_build(const nm_graph* drg, nm_graph** out) {
  return guarded([&] {
    require(drg, "graph");
    require(out, "out");
    *out = wrap(neumaier::gk_graph(neumaier::validate_antipodal_drg(drg->g)));
  });
}

nm_status nm_whiteman_build(uint32_t p, uint32_t q, uint32_t alpha, nm_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(neumaier::whiteman_graph(p, q, alpha));
  });
}

nm_status nm_fixture(const char* name, nm_graph** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const std::string n = name;
    if (n == "omega") {
      *out = wrap(neumaier::omega_fixture());
    } else if (n == "icosahedron") {
      *out = wrap(neumaier::icosahedron());
    } else if (n == "petersen") {
      *out = wrap(neumaier::petersen_graph());
    } else {
      throw neumaier::InvalidArgument("unknown fixture '" + n + "' (expected omega, icosahedron or petersen)");
    }
  });
}

nm_status nm_field_json(uint32_t p, uint32_t r, char** out_json) {
  return guarded([&] {
    require(out_json, "out");
    const auto f = neumaier::FieldSpec::build(p, r);
    nlohmann::json j = f.to_json();
    j["q"] = f.q();
    nlohmann::json prims = nlohmann::json::array();
    for (auto e : f.primitive_elements()) prims.push_back(e.index);
    j["primitive_elements"] = prims;
    *out_json = dup(j.dump());
  });
}

nm_status nm_cyclo_table_json(uint32_t p, uint32_t r, uint32_t m, size_t alpha_position, char** out_json) {
  return guarded([&] {
    require(out_json, "out");
    const auto f = neumaier::FieldSpec::build(p, r);
    const auto prims = f.primitive_elements();
    if (alpha_position >= prims.size()) {
      throw neumaier::InvalidArgument("alpha index " + std::to_string(alpha_position) + " out of range (" +
                                      std::to_string(prims.size()) + " primitive elements)");
    }
    const neumaier::DlogTable dlog(f, prims[alpha_position]);
    const auto t = neumaier::cyclotomic_numbers(f, dlog, m);
    nlohmann::json j = t.to_json();
    j["field"] = f.to_json();
    j["alpha_position"] = alpha_position;
    if (m == 3 || m == 4) {
      const auto uv = neumaier::uv_decomposition(f, dlog, m);
      j["u"] = uv.u;
      j["v"] = uv.v;
    }
    if (m <= 4) {
      std::optional<neumaier::UVPair> uv;
      if (m >= 3) uv = neumaier::uv_decomposition(f, dlog, m);
      j["closed_form_matches"] = neumaier::closed_form(m, f.q(), uv) == t;
    }
    const auto rule = neumaier::check_sum_rules(t);
    j["sum_rules"] = rule ? nlohmann::json(*rule) : nlohmann::json("ok");
    *out_json = dup(j.dump());
  });
}

nm_status nm_classify_json(const nm_graph* g, const uint32_t* clique, size_t clique_len, int vertex_transitive,
                           char** out_json) {
  return guarded([&] {
    require(g, "graph");
    require(out_json, "out");
    neumaier::ClassifyOptions o;
    if (clique) o.candidate_clique = std::vector<std::uint32_t>(clique, clique + clique_len);
    o.vertex_transitive = vertex_transitive != 0;
    *out_json = dup(neumaier::classify(g->g, o).to_json().dump());
  });
}

nm_status nm_wl_closure(const nm_graph* g, size_t cap, unsigned threads, nm_closure** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    neumaier::WlOptions o;
    o.cap = cap;
    o.threads = threads == 0 ? 1 : threads;
    *out = new nm_closure{neumaier::wl_closure(g->g, o)};
  });
}

uint32_t nm_closure_rank(const nm_closure* c) { return c ? c->c.rank : 0; }
void nm_closure_free(nm_closure* c) { delete c; }

nm_status nm_closure_report_json(const nm_closure* c, const nm_graph* g, char** out_json) {
  return guarded([&] {
    require(c, "closure");
    require(g, "graph");
    require(out_json, "out");
    nlohmann::json j = c->c.to_json();
    const auto sup = neumaier::support(g->g, c->c);
    j["support"] = sup.classes;
    j["support_cardinality"] = sup.cardinality();
    const auto ax = neumaier::verify_axioms(c->c);
    j["axioms"] = {{"cc1", ax.cc1},
                   {"cc2", ax.cc2},
                   {"cc3", ax.cc3},
                   {"cc4", ax.cc4},
                   {"cc4_exhaustive", ax.cc4_exhaustive},
                   {"cc4_checks", ax.cc4_checks}};
    if (ax.failure) j["axioms"]["failure"] = *ax.failure;
    std::optional<neumaier::GammaSpec> spec;
    const auto& meta = g->g.meta;
    if (meta && meta->construction == "gamma" && meta->m && meta->q1 && meta->q2) {
      spec = neumaier::GammaSpec::make(static_cast<std::uint32_t>(*meta->m), static_cast<std::uint32_t>(*meta->q1),
                                       static_cast<std::uint32_t>(*meta->q2),
                                       static_cast<std::size_t>(meta->alpha1.value_or(0)),
                                       static_cast<std::size_t>(meta->alpha2.value_or(0)));
    }
    const auto rb = neumaier::rank_bound_check(g->g, c->c, spec);
    j["rank_bounds"] = {{"upper", rb.upper ? nlohmann::json(*rb.upper) : nlohmann::json()},
                        {"upper_ok", rb.upper_ok},
                        {"lower_ok", rb.lower_ok}};
    *out_json = dup(j.dump());
  });
}

nm_status nm_min_poly_degree(const nm_graph* g, size_t cap, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = neumaier::minimal_polynomial_degree(g->g, cap);
  });
}

nm_status nm_schur_verify_json(uint32_t m, uint32_t q1, uint32_t q2, size_t alpha1_position, size_t alpha2_position,
                               char** out_json) {
  return guarded([&] {
    require(out_json, "out");
    const auto spec = neumaier::GammaSpec::make(m, q1, q2, alpha1_position, alpha2_position);
    *out_json = dup(neumaier::schur_verify(spec).to_json().dump());
  });
}

nm_status nm_search_pairs_json(uint32_t m, uint32_t q1_max, const char* verify, unsigned threads, int include_srg,
                               uint32_t window_scale, char** out_json) {
  return guarded([&] {
    require(out_json, "out");
    neumaier::SearchOptions o;
    o.verify = neumaier::verify_mode_from_name(verify ? verify : "none");
    o.threads = threads == 0 ? 1 : threads;
    o.include_srg = include_srg != 0;
    o.window_scale = window_scale == 0 ? 1 : window_scale;
    const auto hits = neumaier::solve_pairs(m, q1_max, o);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& h : hits) arr.push_back(h.to_json());
    *out_json = dup(nlohmann::json{{"hits", arr}, {"csv", neumaier::hits_to_csv(hits)}}.dump());
  });
}

nm_status nm_search_nexus_json(uint32_t m_max, uint32_t q2_max, uint32_t e_max, const char* verify, unsigned threads,
                               char** out_json) {
  return guarded([&] {
    require(out_json, "out");
    neumaier::SearchOptions o;
    o.verify = neumaier::verify_mode_from_name(verify ? verify : "construct");
    o.threads = threads == 0 ? 1 : threads;
    const auto rows = neumaier::nexus_table(m_max, q2_max, e_max, o);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json hs = nlohmann::json::array();
      for (const auto& h : r.hits) hs.push_back(h.to_json());
      arr.push_back({{"e", r.e}, {"hits", hs}});
    }
    *out_json = dup(nlohmann::json{{"rows", arr}, {"csv", neumaier::nexus_to_csv(rows)}}.dump());
  });
}

}  // extern "C"
