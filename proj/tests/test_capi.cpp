// SPDX-License-Identifier: Apache-2.0
// Exercises the shared library through its C header only.

#include <doctest.h>

#include <string>

#include "scg/scg.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  scg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  const int edges[] = {0, 1, 1, 2};
  scg_graph* g = nullptr;
  REQUIRE(scg_graph_create(4, edges, 2, &g) == SCG_OK);
  CHECK(scg_graph_order(g) == 4);
  char* doc = nullptr;
  REQUIRE(scg_graph_to_json(g, &doc) == SCG_OK);
  const std::string text = take(doc);
  CHECK(text.find("\"negative_edges\"") != std::string::npos);

  scg_graph* back = nullptr;
  REQUIRE(scg_graph_from_json(text.c_str(), &back) == SCG_OK);
  scg_comparison c = SCG_LESS;
  REQUIRE(scg_compare(g, back, &c, nullptr) == SCG_OK);
  CHECK(c == SCG_EQUAL);

  const int side[] = {1};
  scg_graph* sw = nullptr;
  REQUIRE(scg_graph_switch(g, side, 1, &sw) == SCG_OK);
  char* p1 = nullptr;
  char* p2 = nullptr;
  REQUIRE(scg_charpoly(g, &p1) == SCG_OK);
  REQUIRE(scg_charpoly(sw, &p2) == SCG_OK);
  CHECK(take(p1) == take(p2));

  scg_graph* moved = nullptr;
  CHECK(scg_graph_relocate(g, 0, 1, 2, &moved) == SCG_ERR_PRECONDITION);
  CHECK(std::string(scg_last_error()).find("{0,1}") != std::string::npos);
  REQUIRE(scg_graph_relocate(g, 1, 3, 2, &moved) == SCG_OK);

  const int x[] = {0, 1};
  scg_graph* sub = nullptr;
  REQUIRE(scg_graph_induced(g, x, 2, &sub) == SCG_OK);
  CHECK(scg_graph_order(sub) == 2);

  scg_graph_destroy(sub);
  scg_graph_destroy(moved);
  scg_graph_destroy(sw);
  scg_graph_destroy(back);
  scg_graph_destroy(g);
}

TEST_CASE("error codes") {
  scg_graph* g = nullptr;
  CHECK(scg_graph_from_json("{", &g) == SCG_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(scg_graph_from_family("u1:6", 5, &g) == SCG_ERR_PRECONDITION);
  CHECK(scg_graph_from_family("wheel:4", 5, &g) == SCG_ERR_PARSE);
  CHECK(scg_graph_create(3, nullptr, 0, nullptr) == SCG_ERR_INVALID_ARGUMENT);
  const int bad[] = {0, 5};
  CHECK(scg_graph_create(3, bad, 1, &g) == SCG_ERR_OUT_OF_RANGE);
  char* doc = nullptr;
  CHECK(scg_formula("q1", 4, 4, 0, 0, &doc) == SCG_ERR_PRECONDITION);
  CHECK(scg_search_max(9, 10, "unicyclic", 0, nullptr, &doc) == SCG_ERR_CAPACITY);
  CHECK(std::string(scg_status_name(SCG_ERR_CAPACITY)) == "capacity exceeded");
  CHECK(scg_graph_order(nullptr) == 0);
}

TEST_CASE("spectral calls") {
  scg_graph* a = nullptr;
  scg_graph* b = nullptr;
  REQUIRE(scg_graph_from_family("u1:4", 5, &a) == SCG_OK);
  REQUIRE(scg_graph_from_family("cycle:4", 5, &b) == SCG_OK);
  scg_comparison c = SCG_EQUAL;
  char* doc = nullptr;
  REQUIRE(scg_compare(a, b, &c, &doc) == SCG_OK);
  CHECK(c == SCG_LESS);
  CHECK(take(doc).find("\"Less\"") != std::string::npos);

  REQUIRE(scg_index(b, "1/1024", &doc) == SCG_OK);
  CHECK(take(doc).find("\"index_lo\"") != std::string::npos);
  CHECK(scg_index(b, "-1", &doc) == SCG_ERR_INVALID_ARGUMENT);

  REQUIRE(scg_formula("star", 6, 3, 0, 0, &doc) == SCG_OK);
  CHECK(take(doc).find("\"coefficients\"") != std::string::npos);

  REQUIRE(scg_quotient(R"({"n": 4, "negative_edges": [[0, 1]], "blocks": [[2, 3], [0, 1]], "p": 1})", &doc) ==
          SCG_OK);
  CHECK(take(doc).find("\"matches_charpoly\": true") != std::string::npos);
  scg_graph_destroy(a);
  scg_graph_destroy(b);
}

TEST_CASE("verifiers and cache") {
  scg_cache* cache = nullptr;
  size_t rejected = 7;
  REQUIRE(scg_cache_open(nullptr, &cache, &rejected) == SCG_OK);
  CHECK(rejected == 0);
  scg_search_options opts{cache, 1};
  char* doc = nullptr;
  int passed = 0;
  REQUIRE(scg_verify_theorem(6, 6, &opts, &doc, &passed) == SCG_OK);
  CHECK(passed == 1);
  take(doc);
  CHECK(scg_cache_size(cache) > 0);

  REQUIRE(scg_search_max(6, 5, "unicyclic", 0, &opts, &doc) == SCG_OK);
  const std::string report = take(doc);
  CHECK(report.find("\"class\": \"unicyclic\"") != std::string::npos);
  CHECK(scg_cache_hits(cache) > 0);

  int consistent = 0;
  REQUIRE(scg_check_conjecture(7, 5, 1, &opts, &doc, &consistent) == SCG_OK);
  CHECK(consistent == 1);
  CHECK(take(doc).find("CONSISTENT") != std::string::npos);

  REQUIRE(scg_verify_lemma("diff-u1", 9, nullptr, &passed) == SCG_OK);
  CHECK(passed == 1);
  REQUIRE(scg_verify_corollary("qst", 8, nullptr, nullptr, &passed) == SCG_OK);
  CHECK(passed == 1);
  CHECK(scg_verify_corollary("other", 8, nullptr, nullptr, &passed) == SCG_ERR_INVALID_ARGUMENT);

  scg_graph* g = nullptr;
  REQUIRE(scg_graph_from_family("star:2", 6, &g) == SCG_OK);
  REQUIRE(scg_check_rotation(g, 10, 1, nullptr, &passed) == SCG_OK);
  CHECK(passed == 1);
  REQUIRE(scg_check_interlacing(g, 10, 1, nullptr, &passed) == SCG_OK);
  CHECK(passed == 1);
  scg_graph_destroy(g);
  scg_cache_destroy(cache);
}
