// SPDX-License-Identifier: Apache-2.0

#include "scg/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "scg/error.hpp"

namespace scg {

namespace {

std::vector<int> parse_ints(const std::string& text, const std::string& whole) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "malformed family parameter '" + item + "' in '" + whole + "'");
    }
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) fail(ErrorKind::Precondition, message);
}

void add_pendants(std::vector<Edge>& edges, Vertex at, int first, int count) {
  for (int i = 0; i < count; ++i) edges.emplace_back(at, first + i);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::Parse, "family '" + text + "' needs the form name:params");
  const std::string name = text.substr(0, colon);
  const std::vector<int> p = parse_ints(text.substr(colon + 1), text);
  auto want = [&](std::size_t count) {
    if (p.size() != count)
      fail(ErrorKind::Parse, "family '" + name + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "star") { want(1); return star(p[0]); }
  if (name == "dstar") { want(2); return double_star(p[0], p[1]); }
  if (name == "cycle") { want(1); return cycle(p[0]); }
  if (name == "q1") { want(1); return q1(p[0]); }
  if (name == "qst") { want(2); return qst(p[0], p[1]); }
  if (name == "u1") { want(1); return u1(p[0]); }
  if (name == "gt") { want(2); return gt(p[0], p[1]); }
  fail(ErrorKind::Parse, "unknown family '" + name + "'");
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case FamilyKind::Star: return "star:" + std::to_string(k);
    case FamilyKind::DoubleStar: return "dstar:" + std::to_string(s) + "," + std::to_string(t);
    case FamilyKind::Cycle: return "cycle:" + std::to_string(g);
    case FamilyKind::Q1: return "q1:" + std::to_string(k);
    case FamilyKind::Qst: return "qst:" + std::to_string(s) + "," + std::to_string(t);
    case FamilyKind::U1: return "u1:" + std::to_string(k);
    case FamilyKind::Gt: return "gt:" + std::to_string(k) + "," + std::to_string(t);
  }
  return "?";
}

SimpleGraph build_family(const FamilySpec& spec) {
  std::vector<Edge> e;
  switch (spec.kind) {
    case FamilyKind::Star:
      require(spec.k >= 1, "star needs k >= 1");
      add_pendants(e, 0, 1, spec.k);
      return SimpleGraph(spec.k + 1, e);
    case FamilyKind::DoubleStar:
      require(spec.s >= 1 && spec.t >= 1, "double star needs s, t >= 1");
      e.emplace_back(0, 1);
      add_pendants(e, 0, 2, spec.s);
      add_pendants(e, 1, 2 + spec.s, spec.t);
      return SimpleGraph(spec.s + spec.t + 2, e);
    case FamilyKind::Cycle:
      require(spec.g >= 3, "cycle needs length g >= 3");
      for (int i = 0; i < spec.g; ++i) e.emplace_back(i, (i + 1) % spec.g);
      return SimpleGraph(spec.g, e);
    case FamilyKind::Q1:
      require(spec.k >= 4, "q1 needs k >= 4");
      e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
      add_pendants(e, 0, 4, spec.k - 4);
      return SimpleGraph(spec.k, e);
    case FamilyKind::Qst:
      require(spec.s >= 1 && spec.t >= 1, "qst needs s, t >= 1");
      e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
      add_pendants(e, 0, 4, spec.s);
      add_pendants(e, 1, 4 + spec.s, spec.t);
      return SimpleGraph(spec.s + spec.t + 4, e);
    case FamilyKind::U1:
      require(spec.k >= 3, "u1 needs k >= 3");
      e = {{0, 1}, {1, 2}, {0, 2}};
      add_pendants(e, 0, 3, spec.k - 3);
      return SimpleGraph(spec.k, e);
    case FamilyKind::Gt:
      require(spec.t >= 0, "gt needs t >= 0");
      require(spec.k >= 3 * spec.t, "gt needs k >= 3t");
      require(spec.k >= 1, "gt needs k >= 1");
      for (int i = 0; i < spec.t; ++i) {
        e.emplace_back(0, 2 * i + 1);
        e.emplace_back(0, 2 * i + 2);
        e.emplace_back(2 * i + 1, 2 * i + 2);
      }
      add_pendants(e, 0, 2 * spec.t + 1, spec.k - 3 * spec.t);
      return SimpleGraph(spec.k - spec.t + 1, e);
  }
  fail(ErrorKind::InvalidArgument, "unknown family kind");
}

namespace {

/// Biconnected components as edge lists (Hopcroft-Tarjan with an edge stack).
std::vector<std::vector<Edge>> blocks_of(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.first)].push_back(e.second);
    adj[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] == -1) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
          std::vector<Edge> block;
          const Edge top(v, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
          }
          out.push_back(std::move(block));
        }
      } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
        stack.emplace_back(v, w);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[static_cast<std::size_t>(v)] == -1) dfs(v, -1);
  return out;
}

int block_vertex_count(const std::vector<Edge>& block) {
  std::vector<Vertex> vs;
  for (const Edge& e : block) {
    vs.push_back(e.first);
    vs.push_back(e.second);
  }
  std::sort(vs.begin(), vs.end());
  return static_cast<int>(std::unique(vs.begin(), vs.end()) - vs.begin());
}

std::vector<SimpleGraph> sorted_unique(std::map<CanonicalForm, SimpleGraph>&& found) {
  std::vector<SimpleGraph> out;
  out.reserve(found.size());
  for (auto& [form, graph] : found) out.push_back(std::move(graph));
  return out;
}

}  // namespace

bool is_cactus(const SimpleGraph& g) {
  if (!g.is_connected()) return false;
  for (const auto& block : blocks_of(g)) {
    // A 2-connected block with as many edges as vertices is a cycle.
    if (block.size() == 1) continue;
    if (static_cast<int>(block.size()) != block_vertex_count(block)) return false;
  }
  return true;
}

int cycle_block_count(const SimpleGraph& g) {
  int count = 0;
  for (const auto& block : blocks_of(g))
    if (block.size() > 1) ++count;
  return count;
}

std::vector<SimpleGraph> enumerate_trees(int order) {
  if (order < 1 || order > kCanonicalMaxOrder)
    fail(ErrorKind::Capacity, "tree enumeration supports order 1.." + std::to_string(kCanonicalMaxOrder));
  std::vector<SimpleGraph> level{SimpleGraph(1, {})};
  for (int size = 2; size <= order; ++size) {
    std::map<CanonicalForm, SimpleGraph> found;
    for (const SimpleGraph& t : level)
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<Edge> e = t.edges();
        e.emplace_back(v, t.order());
        CanonicalLabeling c = canonical_labeling(SimpleGraph(size, std::move(e)));
        found.emplace(c.form, std::move(c.graph));
      }
    level = sorted_unique(std::move(found));
  }
  return level;
}

std::vector<SimpleGraph> enumerate_connected(int order, int extra) {
  if (extra < 0) fail(ErrorKind::InvalidArgument, "extra edge count must be nonnegative");
  std::map<CanonicalForm, SimpleGraph> found;
  for (const SimpleGraph& tree : enumerate_trees(order)) {
    std::vector<Edge> missing;
    for (int a = 0; a < order; ++a)
      for (int b = a + 1; b < order; ++b)
        if (!tree.has_edge(a, b)) missing.emplace_back(a, b);
    if (static_cast<int>(missing.size()) < extra) continue;
    std::vector<int> pick(static_cast<std::size_t>(extra));
    std::function<void(int, int)> choose = [&](int start, int depth) {
      if (depth == extra) {
        std::vector<Edge> e = tree.edges();
        for (int i : pick) e.push_back(missing[static_cast<std::size_t>(i)]);
        CanonicalLabeling c = canonical_labeling(SimpleGraph(order, std::move(e)));
        found.emplace(c.form, std::move(c.graph));
        return;
      }
      for (int i = start; i < static_cast<int>(missing.size()); ++i) {
        pick[static_cast<std::size_t>(depth)] = i;
        choose(i + 1, depth + 1);
      }
    };
    choose(0, 0);
  }
  return sorted_unique(std::move(found));
}

std::vector<SimpleGraph> enumerate_unicyclic(int k) {
  if (k < 3 || k > 9) fail(ErrorKind::Capacity, "unicyclic enumeration supports order 3..9, got " + std::to_string(k));
  auto out = enumerate_connected(k, 1);
  for (const SimpleGraph& g : out)
    if (!g.is_connected() || static_cast<int>(g.size()) != k || cycle_block_count(g) != 1)
      fail(ErrorKind::Numeric, "unicyclic enumeration produced an invalid graph");
  return out;
}

std::vector<SimpleGraph> enumerate_cacti(int k, int t) {
  if (t < 0 || k < 0) fail(ErrorKind::InvalidArgument, "cactus enumeration needs k, t >= 0");
  const int order = k - t + 1;
  if (k > 9 || order > kCanonicalMaxOrder)
    fail(ErrorKind::Capacity, "cactus enumeration supports k <= 9 and order k - t + 1 <= 10");
  if (order < 1) return {};
  std::vector<SimpleGraph> out;
  for (SimpleGraph& g : enumerate_connected(order, t))
    if (is_cactus(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace scg
