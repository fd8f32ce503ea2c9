// SPDX-License-Identifier: Apache-2.0

// Canonical labeling by exhaustive search over vertex orderings that respect
// an iterated degree refinement, with prefix pruning on the column-wise code.

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>

#include "scg/error.hpp"
#include "scg/graph.hpp"

namespace scg {

namespace {

using Rows = std::array<std::uint32_t, kCanonicalMaxOrder>;

int bit_count(int order) { return order * (order - 1) / 2; }

/// Colors are ranks of (own color, sorted neighbor colors), starting from
/// degree; iterated until the partition stops splitting.
std::vector<int> refined_colors(const Rows& rows, int n) {
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = __builtin_popcount(rows[static_cast<std::size_t>(v)]);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (rows[static_cast<std::size_t>(v)] >> u & 1u) nb.push_back(color[static_cast<std::size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    if (r == classes) break;
    classes = r;
  }
  return color;
}

struct Search {
  int n = 0;
  int total_bits = 0;
  Rows rows{};
  std::vector<int> cell_of_position;  // color required at each position
  std::vector<int> color;
  std::vector<int> order;             // order[p] = vertex at position p
  std::vector<bool> used;
  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<int> best_order;

  void run(int position, std::uint64_t prefix, int prefix_bits) {
    if (position == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
        best_order = order;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] ||
          color[static_cast<std::size_t>(v)] != cell_of_position[static_cast<std::size_t>(position)])
        continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < position; ++i)
        next = (next << 1) | (rows[static_cast<std::size_t>(v)] >> order[static_cast<std::size_t>(i)] & 1u);
      const int next_bits = prefix_bits + position;
      if (have_best && next_bits > 0 && next > (best >> (total_bits - next_bits))) continue;
      used[static_cast<std::size_t>(v)] = true;
      order[static_cast<std::size_t>(position)] = v;
      run(position + 1, next, next_bits);
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

}  // namespace

std::string CanonicalForm::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%d:%llx", order, static_cast<unsigned long long>(code));
  return buf;
}

CanonicalForm CanonicalForm::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
    fail(ErrorKind::Parse, "malformed canonical form '" + text + "'");
  CanonicalForm f;
  try {
    std::size_t used = 0;
    f.order = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("order");
    const std::string hex = text.substr(colon + 1);
    f.code = std::stoull(hex, &used, 16);
    if (used != hex.size()) throw std::invalid_argument("code");
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "malformed canonical form '" + text + "'");
  }
  if (f.order < 0 || f.order > kCanonicalMaxOrder)
    fail(ErrorKind::Parse, "canonical form order out of range in '" + text + "'");
  if (bit_count(f.order) < 64 && (f.code >> bit_count(f.order)) != 0)
    fail(ErrorKind::Parse, "canonical code too long for its order in '" + text + "'");
  return f;
}

CanonicalLabeling canonical_labeling(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder)
    fail(ErrorKind::Capacity, "canonical form supports order <= " +
                                  std::to_string(kCanonicalMaxOrder) + ", got " +
                                  std::to_string(n));
  Search s;
  s.n = n;
  s.total_bits = bit_count(n);
  for (const Edge& e : g.edges()) {
    s.rows[static_cast<std::size_t>(e.first)] |= 1u << e.second;
    s.rows[static_cast<std::size_t>(e.second)] |= 1u << e.first;
  }
  s.color = refined_colors(s.rows, n);
  s.cell_of_position = s.color;
  std::sort(s.cell_of_position.begin(), s.cell_of_position.end());
  s.order.assign(static_cast<std::size_t>(n), -1);
  s.used.assign(static_cast<std::size_t>(n), false);
  s.run(0, 0, 0);

  CanonicalLabeling out;
  out.form = CanonicalForm{n, s.best};
  out.perm.assign(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) out.perm[static_cast<std::size_t>(s.best_order[static_cast<std::size_t>(p)])] = p;
  out.graph = g.permuted(out.perm);
  return out;
}

CanonicalForm canonical_form(const SimpleGraph& g) { return canonical_labeling(g).form; }

SimpleGraph graph_from_canonical(const CanonicalForm& form) {
  if (form.order < 0 || form.order > kCanonicalMaxOrder)
    fail(ErrorKind::Capacity, "canonical form order out of range");
  const int total = bit_count(form.order);
  std::vector<Edge> edges;
  int r = 0;
  for (int j = 1; j < form.order; ++j)
    for (int i = 0; i < j; ++i, ++r)
      if (form.code >> (total - 1 - r) & 1u) edges.emplace_back(i, j);
  return SimpleGraph(form.order, std::move(edges));
}

}  // namespace scg
