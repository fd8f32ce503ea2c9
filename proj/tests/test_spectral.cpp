// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "scg/charpoly.hpp"
#include "scg/error.hpp"
#include "scg/families.hpp"
#include "scg/formulas.hpp"
#include "scg/quotient.hpp"

using namespace scg;
namespace f = scg::formulas;

namespace {

SignedCompleteGraph embed(int n, const FamilySpec& s) { return build_signed_complete(n, build_family(s)); }

}  // namespace

TEST_CASE("partition validation names the offending block") {
  const SignedCompleteGraph g(4, {{0, 1}});
  CHECK_NOTHROW(validate_partition(g, {{2, 3}, {0, 1}}, 1));
  try {
    validate_partition(g, {{0, 1}, {2, 3}}, 2);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    CHECK(std::string(e.what()).find("X_1") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_partition(g, {{0}, {1, 2, 3}}, 2), Error);  // mixed signs from 0 into {1,2,3}
  CHECK_THROWS_AS(validate_partition(g, {{0, 1}, {2}}, 1), Error);     // 3 uncovered
  CHECK_THROWS_AS(validate_partition(g, {{0, 1}, {1, 2, 3}}, 0), Error);
}

TEST_CASE("quotient matrix of a named partition") {
  const SignedCompleteGraph g(4, {{0, 1}});
  const SignPartition part = validate_partition(g, {{2, 3}, {0, 1}}, 1);
  const QuotientMatrix b = quotient_matrix(part, g);
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(0, 1) == 2);
  CHECK(b.at(1, 0) == 2);
  CHECK(b.at(1, 1) == -1);
  CHECK(char_poly_via_quotient(part, g) == char_poly(g));
}

TEST_CASE("quotient polynomial with fractional entries") {
  // Unequal block sizes give non-integer averages in general; the polynomial is still integral.
  const SignedCompleteGraph g = embed(7, FamilySpec::star(3));
  const SignPartition part = validate_partition(g, {{0}, {1, 2, 3}, {4, 5, 6}}, 3);
  CHECK(char_poly_via_quotient(part, g) == char_poly(g));
}

TEST_CASE("exhaustive small partitions factor the polynomial") {
  int cases = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_partitioned_graph(n, 3, [&](const PartitionedGraph& pg) {
      const SignPartition part = validate_partition(pg.graph, pg.blocks, pg.positive_blocks);
      CHECK(char_poly_via_quotient(part, pg.graph) == char_poly(pg.graph));
      ++cases;
    });
  CHECK(cases == 907);  // sum over set partitions of 2^(non-singleton blocks) 2^(block pairs)
}

TEST_CASE("random partitions factor the polynomial") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const PartitionedGraph pg = random_partitioned_graph(rng, 1 + i % 10, 5);
    const SignPartition part = validate_partition(pg.graph, pg.blocks, pg.positive_blocks);
    CHECK(char_poly_via_quotient(part, pg.graph) == char_poly(pg.graph));
  }
}

TEST_CASE("Q(s,t) partition blocks") {
  const auto blocks = qst_partition_blocks(10, 2, 1);
  REQUIRE(blocks.size() == 7);
  CHECK(blocks[4] == std::vector<Vertex>{4, 5});
  CHECK(blocks[5] == std::vector<Vertex>{6});
  CHECK(blocks[6] == std::vector<Vertex>{7, 8, 9});
  CHECK(qst_partition_blocks(7, 2, 1).size() == 6);
  const SignedCompleteGraph g = embed(10, FamilySpec::qst(2, 1));
  CHECK_NOTHROW(validate_partition(g, blocks, 7));
}

TEST_CASE("closed forms equal the exact characteristic polynomial") {
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k < n; ++k) CHECK(f::star_charpoly(n, k) == char_poly(embed(n, FamilySpec::star(k))));
  for (int n = 5; n <= 12; ++n) {
    for (int k = 4; k <= n; ++k) CHECK(f::q1_charpoly(n, k) == char_poly(embed(n, FamilySpec::q1(k))));
    for (int k = 3; k <= n; ++k) CHECK(f::u1_charpoly(n, k) == char_poly(embed(n, FamilySpec::u1(k))));
    CHECK(f::q1_charpoly_full_order(n) == f::q1_charpoly(n, n));
  }
  for (int n = 7; n <= 12; ++n)
    for (int s = 1; s + 5 <= n; ++s)
      for (int t = 1; s + t + 4 <= n; ++t)
        CHECK(f::qst_charpoly(n, s + t + 4, s, t) == char_poly(embed(n, FamilySpec::qst(s, t))));
}

TEST_CASE("star closed form specific values") {
  // (K_4, K_{1,1}^-) is the single negative edge graph
  CHECK(f::star_charpoly(4, 1) == IntPolynomial{5, 0, -6, 0, 1});
}

TEST_CASE("full order branches") {
  for (int n = 7; n <= 12; ++n)
    for (int s = 1; s + 5 <= n; ++s) {
      const int t = n - 4 - s;
      CHECK(f::qst_charpoly_full_order(n, s, t) == f::qst_charpoly(n, n, s, t));
      CHECK(f::qst_charpoly_full_order_sextic(n, s, t) == f::qst_charpoly(n, n, s, t));
    }
}

TEST_CASE("difference identities") {
  for (int n = 7; n <= 12; ++n)
    for (int s = 1; s + 5 <= n; ++s)
      for (int t = 1; s + t + 4 <= n; ++t)
        CHECK(f::diff_qst_vs_q1(n, s + t + 4, s, t) == f::diff_qst_vs_q1_product(n, s + t + 4, s, t));
  for (int n = 5; n <= 12; ++n) {
    for (int k = 4; k <= n; ++k) CHECK(f::diff_u1_vs_q1(n, k) == f::diff_u1_vs_q1_product(n, k));
    for (int k = 3; k < n; ++k) CHECK(f::diff_star_vs_u1(n, k) == f::diff_star_vs_u1_product(n, k));
    CHECK(f::diff_star_vs_u1_triangle(n) == f::diff_star_vs_u1(n, 3));
  }
}

TEST_CASE("formula preconditions") {
  CHECK_THROWS_AS(f::star_charpoly(5, 5), Error);
  CHECK_THROWS_AS(f::q1_charpoly(4, 4), Error);
  CHECK_THROWS_AS(f::q1_charpoly(6, 7), Error);
  CHECK_THROWS_AS(f::qst_charpoly(8, 7, 1, 1), Error);  // k != s + t + 4
  CHECK_THROWS_AS(f::qst_charpoly(6, 6, 1, 1), Error);
  CHECK_THROWS_AS(f::u1_charpoly(4, 3), Error);
}
