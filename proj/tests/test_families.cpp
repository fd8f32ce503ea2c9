// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "oracles.hpp"
#include "scg/error.hpp"
#include "scg/families.hpp"

using namespace scg;

TEST_CASE("family DSL") {
  CHECK(FamilySpec::parse("u1:4").to_string() == "u1:4");
  CHECK(FamilySpec::parse("qst:2,1").kind == FamilyKind::Qst);
  CHECK(FamilySpec::parse("qst:2,1").k == 7);
  CHECK(FamilySpec::parse("gt:7,2").t == 2);
  CHECK_THROWS_AS(FamilySpec::parse("u1"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("wheel:5"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("qst:1"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("u1:x"), Error);
}

TEST_CASE("family constructions") {
  const SimpleGraph u1_3 = build_family(FamilySpec::u1(3));
  CHECK(u1_3 == SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  const SimpleGraph q1 = build_family(FamilySpec::q1(6));
  CHECK(q1.order() == 6);
  CHECK(q1.degree(0) == 4);
  CHECK(q1.has_edge(0, 1));
  CHECK(q1.has_edge(0, 3));
  CHECK(q1.has_edge(1, 2));
  CHECK(q1.has_edge(2, 3));
  const SimpleGraph qst = build_family(FamilySpec::qst(2, 1));
  CHECK(qst.degree(0) == 4);
  CHECK(qst.degree(1) == 3);
  CHECK(qst.has_edge(1, 6));
  const SimpleGraph bowtie = build_family(FamilySpec::gt(6, 2));
  CHECK(bowtie.order() == 5);
  CHECK(bowtie.degree(0) == 4);
  CHECK(cycle_block_count(bowtie) == 2);
  CHECK(build_family(FamilySpec::gt(5, 0)) == build_family(FamilySpec::star(5)));
  const SimpleGraph d = build_family(FamilySpec::double_star(2, 3));
  CHECK(d.degree(0) == 3);
  CHECK(d.degree(1) == 4);
  CHECK_THROWS_AS(build_family(FamilySpec::cycle(2)), Error);
  CHECK_THROWS_AS(build_family(FamilySpec::q1(3)), Error);
  CHECK_THROWS_AS(build_family(FamilySpec::gt(5, 2)), Error);
}

TEST_CASE("cactus recognition") {
  CHECK(is_cactus(build_family(FamilySpec::gt(7, 2))));
  CHECK(is_cactus(build_family(FamilySpec::star(4))));
  // two triangles sharing an edge
  CHECK_FALSE(is_cactus(SimpleGraph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}})));
  CHECK_FALSE(is_cactus(SimpleGraph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("tree counts") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_trees(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("unicyclic enumeration matches the labeled oracle") {
  const std::size_t expected[] = {1, 2, 5, 13, 33};
  for (int k = 3; k <= 7; ++k) {
    const auto classes = oracle::labeled_unicyclic_classes(k);
    CHECK(classes.size() == expected[k - 3]);
    const auto graphs = enumerate_unicyclic(k);
    CHECK(graphs.size() == classes.size());
    CHECK(oracle::classes_of(graphs) == classes);
  }
  CHECK(enumerate_unicyclic(8).size() == 89);
  CHECK(enumerate_unicyclic(9).size() == 240);
  CHECK_THROWS_AS(enumerate_unicyclic(10), Error);
}

TEST_CASE("cactus enumeration matches edge-subset enumeration") {
  for (int t = 0; t <= 2; ++t)
    for (int k = std::max(1, 3 * t); k - t + 1 <= 6; ++k) {
      const auto graphs = enumerate_cacti(k, t);
      for (const SimpleGraph& g : graphs) {
        CHECK(is_cactus(g));
        CHECK(cycle_block_count(g) == t);
      }
      CHECK(oracle::classes_of(graphs) == oracle::edge_subset_cactus_classes(k, t));
    }
  CHECK_THROWS_AS(enumerate_cacti(10, 1), Error);
}
