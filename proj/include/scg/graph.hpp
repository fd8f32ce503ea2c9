// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace scg {

using Vertex = int;

/// Unordered vertex pair, normalized so that first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Undirected simple graph on vertices {0, ..., order-1}. Edges are stored
/// sorted and unique. Disconnected graphs are allowed.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws Error(OutOfRange) for an endpoint >= order and
  /// Error(InvalidArgument) for self-loops or duplicate edges.
  SimpleGraph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<int> degrees() const;
  bool is_connected() const;

  /// Graph with vertex v relabeled to perm[v].
  SimpleGraph permuted(std::span<const int> perm) const;
  SimpleGraph with_edge(Vertex a, Vertex b) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
};

/// The signed complete graph (K_n, H^-): every pair of distinct vertices is
/// adjacent; the pairs in `negative` carry sign -1 and all others +1.
class SignedCompleteGraph {
 public:
  SignedCompleteGraph() = default;
  SignedCompleteGraph(int order, std::vector<Edge> negative);

  int order() const noexcept { return order_; }
  const std::vector<Edge>& negative_edges() const noexcept { return negative_; }

  /// +1 or -1 for distinct vertices, 0 on the diagonal.
  int sign(Vertex a, Vertex b) const;
  /// Signed adjacency matrix, row-major.
  std::vector<int> adjacency() const;

  /// The subgraph H induced by the negative edges, on all n vertices.
  SimpleGraph negative_graph() const;

  SignedCompleteGraph permuted(std::span<const int> perm) const;

  bool operator==(const SignedCompleteGraph& o) const {
    return order_ == o.order_ && negative_ == o.negative_;
  }

 private:
  std::size_t slot(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(b);
  }

  int order_ = 0;
  std::vector<Edge> negative_;
  std::vector<std::int8_t> signs_;
};

/// Embeds H as the negative subgraph of K_n. H may have fewer than n vertices.
SignedCompleteGraph build_signed_complete(int n, const SimpleGraph& h);

/// Flips every edge with exactly one endpoint in `vertices`.
SignedCompleteGraph switch_at(const SignedCompleteGraph& g,
                              std::span<const Vertex> vertices);

/// R(u, v, w): uv goes from + to -, uw goes from - to +.
SignedCompleteGraph relocate(const SignedCompleteGraph& g, Vertex u, Vertex v,
                             Vertex w);

/// Induced signed complete graph on `vertices`, relabeled in ascending order.
SignedCompleteGraph induced(const SignedCompleteGraph& g,
                            std::span<const Vertex> vertices);

inline constexpr int kCanonicalMaxOrder = 10;

/// Isomorphism-invariant key of a simple graph of order <= 10: the
/// lexicographically smallest upper-triangle adjacency bit string over all
/// vertex orderings, packed column-wise into an integer.
struct CanonicalForm {
  int order = 0;
  std::uint64_t code = 0;

  auto operator<=>(const CanonicalForm&) const = default;

  /// "order:hex", e.g. "4:1b".
  std::string to_string() const;
  static CanonicalForm parse(const std::string& text);
};

CanonicalForm canonical_form(const SimpleGraph& g);

/// Canonical form together with a labeling that realizes it: the result graph
/// is g relabeled so that its bit string equals the code.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> perm;
  SimpleGraph graph;
};

CanonicalLabeling canonical_labeling(const SimpleGraph& g);

/// Rebuilds the graph described by a canonical code.
SimpleGraph graph_from_canonical(const CanonicalForm& form);

}  // namespace scg
