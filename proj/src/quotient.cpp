// SPDX-License-Identifier: Apache-2.0

#include "scg/quotient.hpp"

#include <algorithm>

#include "scg/charpoly.hpp"
#include "scg/error.hpp"

namespace scg {

namespace {

std::string block_name(int i) { return "X_" + std::to_string(i + 1); }

}  // namespace

int SignPartition::positive_order() const {
  int m = 0;
  for (int i = 0; i < p_; ++i) m += block_size(i);
  return m;
}

int SignPartition::negative_order() const {
  int m = 0;
  for (int i = p_; i < block_count(); ++i) m += block_size(i);
  return m;
}

SignPartition validate_partition(const SignedCompleteGraph& g, std::vector<std::vector<Vertex>> blocks,
                                 int positive_blocks) {
  const int n = g.order();
  const int m = static_cast<int>(blocks.size());
  if (positive_blocks < 0 || positive_blocks > m)
    fail(ErrorKind::Precondition, "p must lie in 0.." + std::to_string(m));
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < m; ++i) {
    auto& b = blocks[static_cast<std::size_t>(i)];
    if (b.empty()) fail(ErrorKind::Precondition, "block " + block_name(i) + " is empty");
    std::sort(b.begin(), b.end());
    for (Vertex v : b) {
      if (v < 0 || v >= n)
        fail(ErrorKind::OutOfRange, "block " + block_name(i) + " contains vertex " + std::to_string(v) +
                                        " outside 0.." + std::to_string(n - 1));
      if (owner[static_cast<std::size_t>(v)] != -1)
        fail(ErrorKind::Precondition, "vertex " + std::to_string(v) + " appears in " +
                                          block_name(owner[static_cast<std::size_t>(v)]) + " and " +
                                          block_name(i));
      owner[static_cast<std::size_t>(v)] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (owner[static_cast<std::size_t>(v)] == -1)
      fail(ErrorKind::Precondition, "vertex " + std::to_string(v) + " is not covered by any block");

  for (int i = 0; i < m; ++i) {
    const int want = i < positive_blocks ? 1 : -1;
    const auto& b = blocks[static_cast<std::size_t>(i)];
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = x + 1; y < b.size(); ++y)
        if (g.sign(b[x], b[y]) != want)
          fail(ErrorKind::Precondition, "block " + block_name(i) + " must be internally " +
                                            (want > 0 ? "positive" : "negative") + " but edge " +
                                            to_string(Edge(b[x], b[y])) + " is not");
  }

  SignPartition out;
  out.between_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& bi = blocks[static_cast<std::size_t>(i)];
      const auto& bj = blocks[static_cast<std::size_t>(j)];
      const int s = g.sign(bi.front(), bj.front());
      for (Vertex x : bi)
        for (Vertex y : bj)
          if (g.sign(x, y) != s)
            fail(ErrorKind::Precondition, "edges between " + block_name(i) + " and " + block_name(j) +
                                              " carry mixed signs");
      out.between_[static_cast<std::size_t>(i * m + j)] = s;
      out.between_[static_cast<std::size_t>(j * m + i)] = s;
    }
  out.blocks_ = std::move(blocks);
  out.p_ = positive_blocks;
  return out;
}

QuotientMatrix quotient_matrix(const SignPartition& partition, const SignedCompleteGraph& g) {
  const int m = partition.block_count();
  QuotientMatrix q;
  q.size = m;
  q.entries.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    const auto& bi = partition.blocks()[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      const auto& bj = partition.blocks()[static_cast<std::size_t>(j)];
      Integer total = 0;
      for (Vertex x : bi)
        for (Vertex y : bj) total += g.sign(x, y);
      Rational avg(total, Integer(static_cast<long>(bi.size())));
      avg.canonicalize();
      q.entries[static_cast<std::size_t>(i * m + j)] = avg;
    }
  }
  return q;
}

IntPolynomial quotient_char_poly(const QuotientMatrix& b) {
  const int m = b.size;
  // det(xI - B) = det(D x I - D B) / D^m with D clearing all denominators.
  Integer d = 1;
  for (const Rational& e : b.entries) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_den_mpz_t());
  Integer d_pow;
  mpz_pow_ui(d_pow.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m));
  std::vector<Rational> values;
  IntMatrix shifted(m);
  for (int x = 0; x <= m; ++x) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational e = (i == j ? Rational(x) : Rational(0)) - b.at(i, j);
        e *= Rational(d);
        e.canonicalize();
        shifted.at(i, j) = e.get_num();
      }
    Rational v(determinant(shifted), d_pow);
    v.canonicalize();
    values.push_back(v);
  }
  std::vector<Integer> coeffs;
  for (const Rational& c : interpolate_consecutive(values)) {
    if (c.get_den() != 1)
      fail(ErrorKind::Numeric, "quotient characteristic polynomial has a non-integer coefficient " + to_string(c));
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly_via_quotient(const SignPartition& partition, const SignedCompleteGraph& g) {
  IntPolynomial phi_b = quotient_char_poly(quotient_matrix(partition, g));
  const int plus_exp = partition.positive_order() - partition.positive_blocks();
  const int minus_exp = partition.negative_order() - partition.negative_blocks();
  return IntPolynomial{1, 1}.pow(static_cast<unsigned>(plus_exp)) *
         IntPolynomial{-1, 1}.pow(static_cast<unsigned>(minus_exp)) * phi_b;
}

std::vector<std::vector<Vertex>> qst_partition_blocks(int n, int s, int t) {
  if (s < 1 || t < 1) fail(ErrorKind::Precondition, "Q(s,t) needs s, t >= 1");
  const int k = s + t + 4;
  if (k > n) fail(ErrorKind::Precondition, "Q(s,t) has order " + std::to_string(k) + " > n = " + std::to_string(n));
  std::vector<std::vector<Vertex>> blocks{{0}, {1}, {2}, {3}};
  std::vector<Vertex> x5, x6, x7;
  for (int i = 0; i < s; ++i) x5.push_back(4 + i);
  for (int i = 0; i < t; ++i) x6.push_back(4 + s + i);
  for (int v = k; v < n; ++v) x7.push_back(v);
  blocks.push_back(std::move(x5));
  blocks.push_back(std::move(x6));
  if (!x7.empty()) blocks.push_back(std::move(x7));
  return blocks;
}

PartitionedGraph graph_from_block_signs(int n, const std::vector<std::vector<Vertex>>& blocks,
                                        const std::vector<int>& internal_signs,
                                        const std::vector<int>& between_signs) {
  const int m = static_cast<int>(blocks.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < m; ++i)
    for (Vertex v : blocks[static_cast<std::size_t>(i)]) owner[static_cast<std::size_t>(v)] = i;
  std::vector<Edge> negative;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int i = owner[static_cast<std::size_t>(a)], j = owner[static_cast<std::size_t>(b)];
      const int s = i == j ? internal_signs[static_cast<std::size_t>(i)]
                           : between_signs[static_cast<std::size_t>(i * m + j)];
      if (s < 0) negative.emplace_back(a, b);
    }
  PartitionedGraph out{SignedCompleteGraph(n, std::move(negative)), {}, 0};
  // Positive-type blocks (including singletons) go first.
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < m; ++i) {
      const auto& b = blocks[static_cast<std::size_t>(i)];
      const bool positive = b.size() == 1 || internal_signs[static_cast<std::size_t>(i)] > 0;
      if (positive == (pass == 0)) out.blocks.push_back(b);
    }
  for (const auto& b : out.blocks)
    if (b.size() == 1 || internal_signs[static_cast<std::size_t>(owner[static_cast<std::size_t>(b.front())])] > 0)
      ++out.positive_blocks;
  return out;
}

PartitionedGraph random_partitioned_graph(std::mt19937_64& rng, int n, int max_blocks) {
  std::uniform_int_distribution<int> count_dist(1, std::min(n, max_blocks));
  const int wanted = count_dist(rng);
  std::uniform_int_distribution<int> pick(0, wanted - 1);
  std::vector<std::vector<Vertex>> raw(static_cast<std::size_t>(wanted));
  for (int v = 0; v < n; ++v) raw[static_cast<std::size_t>(pick(rng))].push_back(v);
  std::vector<std::vector<Vertex>> blocks;
  for (auto& b : raw)
    if (!b.empty()) blocks.push_back(std::move(b));
  const int m = static_cast<int>(blocks.size());
  std::bernoulli_distribution coin(0.5);
  std::vector<int> internal(static_cast<std::size_t>(m)), between(static_cast<std::size_t>(m * m), 1);
  for (int& s : internal) s = coin(rng) ? 1 : -1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int s = coin(rng) ? 1 : -1;
      between[static_cast<std::size_t>(i * m + j)] = s;
      between[static_cast<std::size_t>(j * m + i)] = s;
    }
  return graph_from_block_signs(n, blocks, internal, between);
}

void for_each_partitioned_graph(int n, int max_blocks, const std::function<void(const PartitionedGraph&)>& visit) {
  // Restricted growth strings enumerate set partitions once each.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> grow = [&](int pos, int used) {
    if (pos == n) {
      std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(used));
      for (int v = 0; v < n; ++v) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])].push_back(v);
      std::vector<int> nonsingleton;
      for (int i = 0; i < used; ++i)
        if (blocks[static_cast<std::size_t>(i)].size() > 1) nonsingleton.push_back(i);
      const int pairs = used * (used - 1) / 2;
      for (unsigned inner = 0; inner < (1u << nonsingleton.size()); ++inner)
        for (unsigned outer = 0; outer < (1u << pairs); ++outer) {
          std::vector<int> internal(static_cast<std::size_t>(used), 1);
          for (std::size_t b = 0; b < nonsingleton.size(); ++b)
            if (inner >> b & 1u) internal[static_cast<std::size_t>(nonsingleton[b])] = -1;
          std::vector<int> between(static_cast<std::size_t>(used * used), 1);
          int bit = 0;
          for (int i = 0; i < used; ++i)
            for (int j = i + 1; j < used; ++j, ++bit) {
              const int s = (outer >> bit & 1u) ? -1 : 1;
              between[static_cast<std::size_t>(i * used + j)] = s;
              between[static_cast<std::size_t>(j * used + i)] = s;
            }
          visit(graph_from_block_signs(n, blocks, internal, between));
        }
      return;
    }
    for (int b = 0; b <= used && b < max_blocks; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      grow(pos + 1, std::max(used, b + 1));
    }
  };
  if (n >= 1) grow(0, 0);
}

}  // namespace scg
