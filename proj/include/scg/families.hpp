// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

enum class FamilyKind { Star, DoubleStar, Cycle, Q1, Qst, U1, Gt };

/// A named negative-subgraph family. Unused parameters stay zero:
///   star:k   K_{1,k}, center 0, leaves 1..k
///   dstar:s,t  D_{s,t}, centers 0 and 1, s leaves on 0 then t leaves on 1
///   cycle:g  C_g on 0..g-1
///   q1:k     C_4 on v1..v4 = 0..3 (0-1-2-3-0) with k-4 pendants at v1 = 0
///   qst:s,t  same C_4, s pendants at v1 = 0, then t pendants at v2 = 1
///   u1:k     triangle 0,1,2 with k-3 pendants at v1 = 0
///   gt:k,t   t triangles {0, 2i+1, 2i+2} sharing vertex 0, k-3t pendants at 0
struct FamilySpec {
  FamilyKind kind = FamilyKind::Star;
  int k = 0;
  int s = 0;
  int t = 0;
  int g = 0;

  static FamilySpec star(int k) { return {FamilyKind::Star, k, 0, 0, 0}; }
  static FamilySpec double_star(int s, int t) { return {FamilyKind::DoubleStar, s + t + 1, s, t, 0}; }
  static FamilySpec cycle(int g) { return {FamilyKind::Cycle, g, 0, 0, g}; }
  static FamilySpec q1(int k) { return {FamilyKind::Q1, k, 0, 0, 0}; }
  static FamilySpec qst(int s, int t) { return {FamilyKind::Qst, s + t + 4, s, t, 0}; }
  static FamilySpec u1(int k) { return {FamilyKind::U1, k, 0, 0, 0}; }
  static FamilySpec gt(int k, int t) { return {FamilyKind::Gt, k, 0, t, 0}; }

  /// Parses the DSL forms listed above, e.g. "u1:4" or "qst:2,1".
  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

/// Throws Error(Precondition) naming the violated constraint.
SimpleGraph build_family(const FamilySpec& spec);

/// Every block is a bridge or a cycle, and the graph is connected.
bool is_cactus(const SimpleGraph& g);

/// Number of cycle blocks (for a cactus, equal to edges - vertices + 1).
int cycle_block_count(const SimpleGraph& g);

/// Non-isomorphic trees on `order` vertices (1 <= order <= 10), canonically
/// labeled and sorted by canonical form.
std::vector<SimpleGraph> enumerate_trees(int order);

/// Connected graphs with `order` vertices and order - 1 + extra edges, up to
/// isomorphism, canonically labeled and sorted. Built by adding extra edges
/// to every tree.
std::vector<SimpleGraph> enumerate_connected(int order, int extra);

/// Unicyclic graphs of order k, 3 <= k <= 9.
std::vector<SimpleGraph> enumerate_unicyclic(int k);

/// Cacti with k edges and t cycles (order k - t + 1 <= 10, k <= 9).
std::vector<SimpleGraph> enumerate_cacti(int k, int t);

}  // namespace scg
