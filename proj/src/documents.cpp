// SPDX-License-Identifier: Apache-2.0

#include "scg/documents.hpp"

#include <json.hpp>

#include "scg/error.hpp"

namespace scg {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

ordered versioned() {
  ordered j;
  j["format_version"] = 1;
  return j;
}

json parse_object(const std::string& text, const char* what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    fail(ErrorKind::Parse, std::string(what) + ": " + ex.what());
  }
  if (!j.is_object()) fail(ErrorKind::Parse, std::string(what) + ": expected an object");
  if (j.contains("format_version") && j["format_version"] != 1)
    fail(ErrorKind::Parse, std::string(what) + ": unsupported format_version");
  return j;
}

SignedCompleteGraph graph_from(const json& j) {
  if (!j.contains("n") || !j.contains("negative_edges"))
    fail(ErrorKind::Parse, "graph document needs fields 'n' and 'negative_edges'");
  int n = 0;
  std::vector<Edge> edges;
  try {
    n = j.at("n").get<int>();
    for (const auto& e : j.at("negative_edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "negative_edges entries must be [i, j] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } catch (const json::exception& ex) {
    fail(ErrorKind::Parse, std::string("graph document: ") + ex.what());
  }
  if (n < 1) fail(ErrorKind::InvalidArgument, "graph document: n must be positive");
  return SignedCompleteGraph(n, std::move(edges));
}

ordered interval(const RootInterval& r) {
  ordered j;
  j["index_lo"] = to_string(r.lo());
  j["index_hi"] = to_string(r.hi());
  return j;
}

ordered candidate(const CandidateResult& c, bool with_edges) {
  ordered j;
  j["canonical"] = c.canonical.to_string();
  if (with_edges) {
    ordered edges = ordered::array();
    for (const Edge& e : c.graph.edges()) edges.push_back({e.first, e.second});
    j["edges"] = edges;
  }
  j.update(interval(c.index));
  return j;
}

}  // namespace

std::string graph_document(const SignedCompleteGraph& g) {
  ordered j = versioned();
  j["n"] = g.order();
  ordered edges = ordered::array();
  for (const Edge& e : g.negative_edges()) edges.push_back({e.first, e.second});
  j["negative_edges"] = edges;
  return j.dump(kIndent);
}

SignedCompleteGraph parse_graph_document(const std::string& text) {
  return graph_from(parse_object(text, "graph document"));
}

PartitionDocument parse_partition_document(const std::string& text) {
  const json j = parse_object(text, "partition document");
  PartitionDocument out{graph_from(j), {}, 0};
  if (!j.contains("blocks") || !j.contains("p")) fail(ErrorKind::Parse, "partition document needs 'blocks' and 'p'");
  try {
    out.blocks = j.at("blocks").get<std::vector<std::vector<Vertex>>>();
    out.p = j.at("p").get<int>();
  } catch (const json::exception& ex) {
    fail(ErrorKind::Parse, std::string("partition document: ") + ex.what());
  }
  return out;
}

std::string polynomial_document(const IntPolynomial& p) {
  ordered j = versioned();
  j["degree"] = p.degree();
  j["coefficients"] = p.coefficient_strings();
  j["text"] = p.to_string();
  return j.dump(kIndent);
}

std::string index_document(int n, const IntPolynomial& charpoly, const RootInterval& index) {
  ordered j = versioned();
  j["n"] = n;
  j["charpoly"] = charpoly.coefficient_strings();
  j.update(interval(index));
  j["width"] = to_string(index.width());
  j["index_decimal"] = to_decimal(index.midpoint(), 10);
  return j.dump(kIndent);
}

std::string comparison_document(const RootInterval& a, const RootInterval& b, Comparison result) {
  ordered j = versioned();
  j["result"] = to_string(result);
  j["a"] = interval(a);
  j["b"] = interval(b);
  return j.dump(kIndent);
}

std::string quotient_document(const IntPolynomial& quotient_poly, const IntPolynomial& expanded, bool matches) {
  ordered j = versioned();
  j["quotient_coefficients"] = quotient_poly.coefficient_strings();
  j["coefficients"] = expanded.coefficient_strings();
  j["matches_charpoly"] = matches;
  return j.dump(kIndent);
}

std::string search_document(const SearchReport& r) {
  ordered j = versioned();
  j["class"] = r.class_name;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.cycles) j["t"] = *r.cycles;
  j["candidates"] = r.candidates;
  j["distinct"] = r.table.size();
  ordered maximizers = ordered::array();
  for (const auto& m : r.maximizers) maximizers.push_back(candidate(m, true));
  j["maximizers"] = maximizers;
  if (r.runner_up) {
    ordered ru = candidate(*r.runner_up, true);
    ru["gap"] = to_string(*r.runner_up_gap);
    j["runner_up"] = ru;
  }
  if (r.verdict) j["verdict"] = *r.verdict;
  if (r.witness) j["witness"] = r.witness->to_string();
  ordered table = ordered::array();
  for (const auto& row : r.table) {
    ordered t;
    t["canonical"] = row.canonical.to_string();
    t["index_mid"] = to_string(row.index.midpoint());
    t["index_decimal"] = to_decimal(row.index.midpoint(), 10);
    table.push_back(t);
  }
  j["table"] = table;
  return j.dump(kIndent);
}

std::string verification_document(const VerificationReport& r) {
  ordered j = versioned();
  j["name"] = r.name;
  j["passed"] = r.passed();
  ordered checks = ordered::array();
  for (const Check& c : r.checks) {
    ordered e;
    e["label"] = c.label;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["findings"] = r.findings;
  return j.dump(kIndent);
}

}  // namespace scg
