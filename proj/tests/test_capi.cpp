// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "neumaier/neumaier.h"

using nlohmann::json;

namespace {

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  nm_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::string(nm_version()).size() > 0);
  nm_graph* g = nullptr;
  CHECK(nm_graph_read("/nonexistent/graph.json", &g) == NM_ERR_IO);
  CHECK(g == nullptr);
  CHECK(std::string(nm_last_error()).find("graph.json") != std::string::npos);
  CHECK(nm_graph_read(nullptr, &g) == NM_ERR_INVALID_ARGUMENT);
  CHECK(nm_graph_parse("C", &g) == NM_ERR_PARSE);
  CHECK(nm_fixture("dodecahedron", &g) == NM_ERR_INVALID_ARGUMENT);
  CHECK(nm_gamma_build(3, 4, 8, 0, 0, &g) == NM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("build, classify and rank through handles") {
  nm_graph* g = nullptr;
  REQUIRE(nm_gamma_build(3, 4, 7, 0, 0, &g) == NM_OK);
  CHECK(nm_graph_vertex_count(g) == 28);
  CHECK(nm_graph_edge_count(g) == 126);

  const std::uint32_t clique[] = {0, 7, 14, 21};
  char* out = nullptr;
  REQUIRE(nm_classify_json(g, clique, 4, 1, &out) == NM_OK);
  const auto r = take(out);
  CHECK(r["verdict"] == "strictly-neumaier");
  CHECK(r["k"] == 9);
  CHECK(r["lambda"] == 2);
  CHECK(r["e"] == 1);
  CHECK(r["s"] == 4);

  nm_closure* c = nullptr;
  REQUIRE(nm_wl_closure(g, 1024, 2, &c) == NM_OK);
  CHECK(nm_closure_rank(c) == 6);
  REQUIRE(nm_closure_report_json(c, g, &out) == NM_OK);
  const auto rep = take(out);
  CHECK(rep["support_cardinality"] == 2);
  CHECK(rep["rank_bounds"]["upper"] == 6);
  CHECK(rep["axioms"]["cc4"] == true);
  nm_closure_free(c);

  CHECK(nm_wl_closure(g, 10, 1, &c) == NM_ERR_LIMIT);

  std::size_t deg = 0;
  REQUIRE(nm_min_poly_degree(g, 256, &deg) == NM_OK);
  CHECK(deg >= 3);

  REQUIRE(nm_graph_serialize(g, "graph6", &out) == NM_OK);
  nm_graph* back = nullptr;
  REQUIRE(nm_graph_parse(out, &back) == NM_OK);
  nm_string_free(out);
  CHECK(nm_graph_edge_count(back) == 126);
  nm_graph_free(back);
  nm_graph_free(g);
}

TEST_CASE("fixtures and constructions") {
  nm_graph* ico = nullptr;
  REQUIRE(nm_fixture("icosahedron", &ico) == NM_OK);
  nm_graph* k = nullptr;
  REQUIRE(nm_gk_build(ico, &k) == NM_OK);
  CHECK(nm_graph_vertex_count(k) == 24);
  nm_graph_free(k);
  nm_graph_free(ico);

  nm_graph* pet = nullptr;
  REQUIRE(nm_fixture("petersen", &pet) == NM_OK);
  CHECK(nm_gk_build(pet, &k) == NM_ERR_INVALID_ARGUMENT);
  nm_graph_free(pet);

  nm_graph* w = nullptr;
  REQUIRE(nm_whiteman_build(13, 5, 0, &w) == NM_OK);
  CHECK(nm_graph_vertex_count(w) == 65);
  nm_graph_free(w);
  nm_graph_free(nullptr);
}

TEST_CASE("tables and searches as JSON") {
  char* out = nullptr;
  REQUIRE(nm_cyclo_table_json(7, 1, 3, 0, &out) == NM_OK);
  const auto t = take(out);
  CHECK(t["closed_form_matches"] == true);
  CHECK(t["sum_rules"] == "ok");

  REQUIRE(nm_field_json(2, 2, &out) == NM_OK);
  CHECK(take(out)["primitive_elements"] == json::array({2, 3}));

  REQUIRE(nm_search_pairs_json(4, 30, "none", 1, 0, 1, &out) == NM_OK);
  const auto s = take(out);
  CHECK(s["hits"].size() == 6);
  CHECK(s["csv"].get<std::string>().rfind("m,q1,q2,", 0) == 0);

  CHECK(nm_search_pairs_json(4, 30, "sometimes", 1, 0, 1, &out) == NM_ERR_INVALID_ARGUMENT);

  REQUIRE(nm_schur_verify_json(3, 4, 7, 0, 0, &out) == NM_OK);
  CHECK(take(out)["formulas_hold"] == true);
}
