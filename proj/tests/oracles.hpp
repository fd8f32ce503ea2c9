// SPDX-License-Identifier: Apache-2.0
// Slow, independent reference implementations used only by the tests.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "scg/graph.hpp"
#include "scg/polynomial.hpp"

namespace oracle {

/// Permutation expansion of det(xI - A); n <= 8.
scg::IntPolynomial leibniz_char_poly(const scg::SignedCompleteGraph& g);

/// Smallest adjacency bitmask over all n! relabelings (plain row-major upper
/// triangle, unrelated to the library encoding). n <= 8.
std::uint64_t brute_code(const scg::SimpleGraph& g);

bool isomorphic(const scg::SimpleGraph& a, const scg::SimpleGraph& b);

/// Unicyclic graphs on k labeled vertices built as a cycle on 0..g-1 with every
/// later vertex hung from a smaller label; deduplicated by brute_code. k <= 7.
std::set<std::uint64_t> labeled_unicyclic_classes(int k);

/// Every k-edge subset of pairs on k - t + 1 vertices that is connected with
/// each edge on at most one cycle; deduplicated by brute_code. Order <= 6.
std::set<std::uint64_t> edge_subset_cactus_classes(int k, int t);

std::set<std::uint64_t> classes_of(const std::vector<scg::SimpleGraph>& graphs);

}  // namespace oracle
