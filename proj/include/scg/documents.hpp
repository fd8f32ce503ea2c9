// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scg/graph.hpp"
#include "scg/polynomial.hpp"
#include "scg/roots.hpp"
#include "scg/search.hpp"

namespace scg {

// Versioned JSON documents exchanged with the command line. Every document
// carries "format_version": 1; readers ignore unknown fields.

/// {"n": N, "negative_edges": [[i, j], ...]}
std::string graph_document(const SignedCompleteGraph& g);
SignedCompleteGraph parse_graph_document(const std::string& text);

/// Optional "blocks" (vertex lists) and "p" alongside the graph fields.
struct PartitionDocument {
  SignedCompleteGraph graph;
  std::vector<std::vector<Vertex>> blocks;
  int p = 0;
};
PartitionDocument parse_partition_document(const std::string& text);

/// {"coefficients": ["c0", "c1", ...]} in ascending order plus a readable form.
std::string polynomial_document(const IntPolynomial& p);

std::string index_document(int n, const IntPolynomial& charpoly, const RootInterval& index);
std::string comparison_document(const RootInterval& a, const RootInterval& b, Comparison result);
std::string quotient_document(const IntPolynomial& quotient_poly, const IntPolynomial& expanded, bool matches);
std::string search_document(const SearchReport& report);
std::string verification_document(const VerificationReport& report);

}  // namespace scg
