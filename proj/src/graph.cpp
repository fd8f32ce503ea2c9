// SPDX-License-Identifier: Apache-2.0

#include "scg/graph.hpp"

#include <algorithm>
#include <numeric>

#include "scg/error.hpp"

namespace scg {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

namespace {

void check_vertex(Vertex v, int order) {
  if (v < 0 || v >= order)
    fail(ErrorKind::OutOfRange, "vertex " + std::to_string(v) +
                                    " is outside 0.." + std::to_string(order - 1));
}

std::vector<Edge> normalize_edges(int order, std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.first < 0 || e.second >= order)
      fail(ErrorKind::OutOfRange, "edge " + to_string(e) + " has an endpoint outside 0.." +
                                      std::to_string(order - 1));
    if (e.first == e.second)
      fail(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(e.first));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    fail(ErrorKind::InvalidArgument, "duplicate edge " + to_string(*dup));
  return edges;
}

std::vector<Vertex> normalize_vertex_set(std::span<const Vertex> vertices, int order) {
  std::vector<Vertex> out(vertices.begin(), vertices.end());
  for (Vertex v : out) check_vertex(v, order);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_permutation(std::span<const int> perm, int order) {
  if (static_cast<int>(perm.size()) != order)
    fail(ErrorKind::InvalidArgument, "permutation length does not match graph order");
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  for (int p : perm) {
    check_vertex(p, order);
    if (seen[static_cast<std::size_t>(p)])
      fail(ErrorKind::InvalidArgument, "permutation repeats vertex " + std::to_string(p));
    seen[static_cast<std::size_t>(p)] = true;
  }
}

}  // namespace

SimpleGraph::SimpleGraph(int order, std::vector<Edge> edges) : order_(order) {
  if (order < 0) fail(ErrorKind::InvalidArgument, "negative graph order");
  edges_ = normalize_edges(order, std::move(edges));
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

int SimpleGraph::degree(Vertex v) const {
  check_vertex(v, order_);
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
    return e.first == v || e.second == v;
  }));
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
  check_vertex(v, order_);
  std::vector<Vertex> out;
  for (const Edge& e : edges_) {
    if (e.first == v) out.push_back(e.second);
    else if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(order_), 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<std::size_t>(e.first)];
    ++deg[static_cast<std::size_t>(e.second)];
  }
  return deg;
}

bool SimpleGraph::is_connected() const {
  if (order_ <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(order_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = order_;
  for (const Edge& e : edges_) {
    int a = find(e.first), b = find(e.second);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

SimpleGraph SimpleGraph::permuted(std::span<const int> perm) const {
  check_permutation(perm, order_);
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_)
    out.emplace_back(perm[static_cast<std::size_t>(e.first)],
                     perm[static_cast<std::size_t>(e.second)]);
  return SimpleGraph(order_, std::move(out));
}

SimpleGraph SimpleGraph::with_edge(Vertex a, Vertex b) const {
  std::vector<Edge> out = edges_;
  out.emplace_back(a, b);
  return SimpleGraph(order_, std::move(out));
}

SignedCompleteGraph::SignedCompleteGraph(int order, std::vector<Edge> negative)
    : order_(order) {
  if (order < 1) fail(ErrorKind::InvalidArgument, "signed complete graph needs n >= 1");
  negative_ = normalize_edges(order, std::move(negative));
  signs_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 1);
  for (int i = 0; i < order; ++i) signs_[slot(i, i)] = 0;
  for (const Edge& e : negative_) {
    signs_[slot(e.first, e.second)] = -1;
    signs_[slot(e.second, e.first)] = -1;
  }
}

int SignedCompleteGraph::sign(Vertex a, Vertex b) const {
  check_vertex(a, order_);
  check_vertex(b, order_);
  return signs_[slot(a, b)];
}

std::vector<int> SignedCompleteGraph::adjacency() const {
  return std::vector<int>(signs_.begin(), signs_.end());
}

SimpleGraph SignedCompleteGraph::negative_graph() const {
  return SimpleGraph(order_, negative_);
}

SignedCompleteGraph SignedCompleteGraph::permuted(std::span<const int> perm) const {
  check_permutation(perm, order_);
  std::vector<Edge> out;
  out.reserve(negative_.size());
  for (const Edge& e : negative_)
    out.emplace_back(perm[static_cast<std::size_t>(e.first)],
                     perm[static_cast<std::size_t>(e.second)]);
  return SignedCompleteGraph(order_, std::move(out));
}

SignedCompleteGraph build_signed_complete(int n, const SimpleGraph& h) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be at least 1");
  for (const Edge& e : h.edges())
    if (e.second >= n)
      fail(ErrorKind::OutOfRange, "negative edge " + to_string(e) +
                                      " does not fit in K_" + std::to_string(n));
  return SignedCompleteGraph(n, h.edges());
}

SignedCompleteGraph switch_at(const SignedCompleteGraph& g,
                              std::span<const Vertex> vertices) {
  const int n = g.order();
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Vertex v : vertices) {
    check_vertex(v, n);
    in[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Edge> negative;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int s = g.sign(a, b);
      if (in[static_cast<std::size_t>(a)] != in[static_cast<std::size_t>(b)]) s = -s;
      if (s < 0) negative.emplace_back(a, b);
    }
  return SignedCompleteGraph(n, std::move(negative));
}

SignedCompleteGraph relocate(const SignedCompleteGraph& g, Vertex u, Vertex v,
                             Vertex w) {
  const int n = g.order();
  check_vertex(u, n);
  check_vertex(v, n);
  check_vertex(w, n);
  if (u == v || u == w || v == w)
    fail(ErrorKind::Precondition, "relocation needs three distinct vertices");
  if (g.sign(u, v) != 1)
    fail(ErrorKind::Precondition,
         "relocation: edge " + to_string(Edge(u, v)) + " is not positive");
  if (g.sign(u, w) != -1)
    fail(ErrorKind::Precondition,
         "relocation: edge " + to_string(Edge(u, w)) + " is not negative");
  std::vector<Edge> negative;
  negative.reserve(g.negative_edges().size());
  const Edge removed(u, w);
  for (const Edge& e : g.negative_edges())
    if (e != removed) negative.push_back(e);
  negative.emplace_back(u, v);
  return SignedCompleteGraph(n, std::move(negative));
}

SignedCompleteGraph induced(const SignedCompleteGraph& g,
                            std::span<const Vertex> vertices) {
  std::vector<Vertex> keep = normalize_vertex_set(vertices, g.order());
  if (keep.empty()) fail(ErrorKind::InvalidArgument, "induced subgraph needs a nonempty vertex set");
  const int m = static_cast<int>(keep.size());
  std::vector<Edge> negative;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.sign(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]) < 0)
        negative.emplace_back(i, j);
  return SignedCompleteGraph(m, std::move(negative));
}

}  // namespace scg
