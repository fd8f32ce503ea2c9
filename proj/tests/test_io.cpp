// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "scg/cache.hpp"
#include "scg/charpoly.hpp"
#include "scg/documents.hpp"
#include "scg/error.hpp"
#include "scg/families.hpp"

using namespace scg;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("scg_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

CacheEntry entry_for(int n, const FamilySpec& s) {
  const SimpleGraph h = build_family(s);
  const IntPolynomial p = char_poly(build_signed_complete(n, h));
  const RootInterval r = largest_root(p, report_width());
  return {canonical_form(h), n, p, r.lo(), r.hi()};
}

}  // namespace

TEST_CASE("graph document round trip") {
  const SignedCompleteGraph g = build_signed_complete(6, build_family(FamilySpec::u1(4)));
  const std::string doc = graph_document(g);
  CHECK(nlohmann::json::parse(doc)["format_version"] == 1);
  CHECK(parse_graph_document(doc) == g);
  CHECK(parse_graph_document(R"({"n": 3, "negative_edges": [[0, 2]], "comment": "extra"})") ==
        SignedCompleteGraph(3, {{0, 2}}));
  CHECK_THROWS_AS(parse_graph_document("{"), Error);
  CHECK_THROWS_AS(parse_graph_document(R"({"n": 3})"), Error);
  CHECK_THROWS_AS(parse_graph_document(R"({"n": 3, "negative_edges": [[0, 3]]})"), Error);
  CHECK_THROWS_AS(parse_graph_document(R"({"format_version": 2, "n": 3, "negative_edges": []})"), Error);
}

TEST_CASE("polynomial document keeps decimal strings") {
  const auto j = nlohmann::json::parse(polynomial_document(IntPolynomial{5, 0, -6, 0, 1}));
  CHECK(j["coefficients"] == nlohmann::json::array({"5", "0", "-6", "0", "1"}));
}

TEST_CASE("partition document") {
  const PartitionDocument d =
      parse_partition_document(R"({"n": 4, "negative_edges": [[0, 1]], "blocks": [[2, 3], [0, 1]], "p": 1})");
  CHECK(d.blocks.size() == 2);
  CHECK(d.p == 1);
  CHECK_THROWS_AS(parse_partition_document(R"({"n": 4, "negative_edges": []})"), Error);
}

TEST_CASE("cache empty and missing files") {
  const std::string path = temp_path("empty.jsonl");
  write(path, "");
  CHECK(cache_load(path).entries.empty());
  std::filesystem::remove(path);
  CHECK(cache_load(path).entries.empty());
}

TEST_CASE("cache round trip") {
  const std::string path = temp_path("roundtrip.jsonl");
  const std::vector<CacheEntry> entries{entry_for(6, FamilySpec::u1(4)), entry_for(9, FamilySpec::qst(1, 2))};
  cache_store(path, entries);
  const CacheLoadResult back = cache_load(path);
  CHECK(back.warnings.empty());
  CHECK(back.entries == entries);
  std::filesystem::remove(path);
}

TEST_CASE("cache rejects inconsistent entries and reports malformed lines") {
  const std::string path = temp_path("bad.jsonl");
  CacheEntry good = entry_for(6, FamilySpec::u1(4));
  CacheEntry shifted = good;
  shifted.index_lo -= 1;
  shifted.index_hi -= 1;
  CacheEntry wrong_degree = good;
  wrong_degree.n = 7;
  write(path, cache_entry_line(good) + "\n" + cache_entry_line(shifted) + "\n" + cache_entry_line(wrong_degree) + "\n");
  const CacheLoadResult r = cache_load(path);
  CHECK(r.entries.size() == 1);
  CHECK(r.warnings.size() == 2);

  write(path, cache_entry_line(good) + "\nnot json\n");
  try {
    cache_load(path);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("cache tolerates unknown fields") {
  const std::string path = temp_path("extra.jsonl");
  auto j = nlohmann::json::parse(cache_entry_line(entry_for(5, FamilySpec::cycle(4))));
  j["note"] = "hand edited";
  write(path, j.dump() + "\n");
  CHECK(cache_load(path).entries.size() == 1);
  std::filesystem::remove(path);
}

TEST_CASE("index cache") {
  IndexCache cache;
  const CacheEntry e = entry_for(6, FamilySpec::u1(4));
  CHECK_FALSE(cache.lookup(e.canonical, 6).has_value());
  cache.insert(e);
  CHECK(cache.lookup(e.canonical, 6) == e);
  CHECK_FALSE(cache.lookup(e.canonical, 7).has_value());
  CHECK(cache.hits() == 1);
}

TEST_CASE("report documents") {
  VerificationReport v{"demo", {}, {"a finding"}};
  v.add("ok", true);
  v.add("bad", false, "why");
  const auto j = nlohmann::json::parse(verification_document(v));
  CHECK(j["passed"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["findings"][0] == "a finding");
}
