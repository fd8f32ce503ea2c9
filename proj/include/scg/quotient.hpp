// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "scg/graph.hpp"
#include "scg/polynomial.hpp"

namespace scg {

/// Vertex partition of a signed complete graph in which the first
/// `positive_blocks` blocks induce (K_{n_i}, +), the rest induce (K_{n_i}, -),
/// and each pair of blocks is joined by edges of one common sign.
/// Singleton blocks satisfy either internal condition.
class SignPartition {
 public:
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int positive_blocks() const { return p_; }
  int negative_blocks() const { return block_count() - p_; }
  int block_size(int i) const { return static_cast<int>(blocks_[static_cast<std::size_t>(i)].size()); }
  /// Sum of sizes of the internally positive blocks.
  int positive_order() const;
  int negative_order() const;
  /// Common sign of the edges between blocks i != j.
  int between_sign(int i, int j) const { return between_[static_cast<std::size_t>(i * block_count() + j)]; }

 private:
  friend SignPartition validate_partition(const SignedCompleteGraph&, std::vector<std::vector<Vertex>>, int);

  std::vector<std::vector<Vertex>> blocks_;
  int p_ = 0;
  std::vector<int> between_;
};

/// Checks coverage, internal signs and uniform inter-block signs. Throws
/// Error(Precondition) naming the offending block or pair.
SignPartition validate_partition(const SignedCompleteGraph& g, std::vector<std::vector<Vertex>> blocks,
                                 int positive_blocks);

/// m x m matrix of block-average row sums, row-major.
struct QuotientMatrix {
  int size = 0;
  std::vector<Rational> entries;

  const Rational& at(int i, int j) const { return entries[static_cast<std::size_t>(i * size + j)]; }
};

QuotientMatrix quotient_matrix(const SignPartition& partition, const SignedCompleteGraph& g);

/// det(xI - B) over the rationals by elimination at m+1 points and
/// interpolation; throws Error(Numeric) if a coefficient is not an integer.
IntPolynomial quotient_char_poly(const QuotientMatrix& b);

/// (x+1)^(m1-p) (x-1)^(m2-q) phi(B, x) expanded.
IntPolynomial char_poly_via_quotient(const SignPartition& partition, const SignedCompleteGraph& g);

/// Blocks X_1..X_7 for (K_n, Q(s,t)^-) with Q(s,t) labeled as build_family
/// does: {v1}, {v2}, {v3}, {v4}, N(v1)\{v2,v4}, N(v2)\{v1,v3}, V(K_n)\V(Q(s,t)).
/// When k = n the last block is empty and omitted (6 blocks). All blocks are
/// positive-type.
std::vector<std::vector<Vertex>> qst_partition_blocks(int n, int s, int t);

/// A signed complete graph generated from a block structure, together with
/// the blocks (positive-type first) that form a valid sign partition of it.
struct PartitionedGraph {
  SignedCompleteGraph graph;
  std::vector<std::vector<Vertex>> blocks;
  int positive_blocks = 0;
};

/// internal_signs[i] is the sign inside block i (ignored for singletons);
/// between_signs is an m x m row-major matrix of inter-block signs.
PartitionedGraph graph_from_block_signs(int n, const std::vector<std::vector<Vertex>>& blocks,
                                        const std::vector<int>& internal_signs,
                                        const std::vector<int>& between_signs);

/// Uniformly random block assignment with 1..max_blocks blocks and random signs.
PartitionedGraph random_partitioned_graph(std::mt19937_64& rng, int n, int max_blocks);

/// Calls `visit` for every set partition of {0..n-1} into at most max_blocks
/// blocks and every admissible choice of internal and inter-block signs.
void for_each_partitioned_graph(int n, int max_blocks, const std::function<void(const PartitionedGraph&)>& visit);

}  // namespace scg
