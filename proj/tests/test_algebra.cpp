// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scg/charpoly.hpp"
#include "scg/error.hpp"
#include "scg/families.hpp"
#include "scg/numeric.hpp"
#include "scg/roots.hpp"

using namespace scg;

namespace {

SignedCompleteGraph random_signed(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> neg;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) neg.emplace_back(a, b);
  return SignedCompleteGraph(n, neg);
}

}  // namespace

TEST_CASE("polynomial arithmetic and text") {
  const IntPolynomial p{2, -3, 0, 1};  // x^3 - 3x + 2 = (x-1)^2 (x+2)
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "x^3 - 3*x + 2");
  CHECK(p.evaluate(Integer(1)) == 0);
  CHECK(p.evaluate(Rational(1, 2)) == Rational(5, 8));
  CHECK(p.sign_at(Rational(-3)) == -1);
  CHECK(p.derivative() == IntPolynomial{-3, 0, 3});
  CHECK(IntPolynomial::linear_root(1).pow(2) * IntPolynomial::linear_root(-2) == p);
  CHECK(IntPolynomial::from_strings(p.coefficient_strings()) == p);
  CHECK(squarefree_part(p) == IntPolynomial{-2, 1, 1});
  CHECK(gcd(p, p.derivative()) == IntPolynomial{-1, 1});
  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == IntPolynomial{2, 1});
  CHECK(parts[1] == IntPolynomial{-1, 1});
  CHECK(IntPolynomial().degree() == -1);
  CHECK((p - p).is_zero());
}

TEST_CASE("big coefficients survive text") {
  IntPolynomial big = IntPolynomial{1, 1}.pow(80);
  CHECK(big.coefficient(40) > Integer("1000000000000000000000"));
  CHECK(IntPolynomial::from_strings(big.coefficient_strings()) == big);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1e-12") == Rational(1, Integer("1000000000000")));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1/1024") == Rational(1, 1024));
  CHECK(parse_rational("-3") == -3);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(to_decimal(Rational(10, 3), 4) == "3.3333");
}

TEST_CASE("determinant matches the permutation expansion") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> values(static_cast<std::size_t>(n * n));
    for (int& v : values) v = entry(rng);
    const IntMatrix m(n, values);
    // det(M) = (-1)^n phi_M(0) with phi_M(x) = det(xI - M)
    const IntPolynomial phi = char_poly_leverrier(m);
    CHECK(determinant(m) == (n % 2 ? -phi.coefficient(0) : phi.coefficient(0)));
  }
  CHECK(determinant(IntMatrix(2, std::vector<int>{1, 2, 3, 4})) == -2);
}

TEST_CASE("characteristic polynomial agrees with two independent methods") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 7;
    const SignedCompleteGraph g = random_signed(rng, n);
    const IntPolynomial p = char_poly(g);
    CHECK(p == oracle::leibniz_char_poly(g));
    CHECK(p == char_poly_cross_check(g));
    CHECK(p.is_monic());
    CHECK(p.coefficient(n - 1) == 0);
  }
  const SignedCompleteGraph big = build_signed_complete(40, build_family(FamilySpec::star(20)));
  CHECK(char_poly(big) == char_poly_cross_check(big));
}

TEST_CASE("characteristic polynomial is label invariant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const SignedCompleteGraph g = random_signed(rng, 7);
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(char_poly(g.permuted(perm)) == char_poly(g));
  }
}

TEST_CASE("small spectra") {
  CHECK(char_poly(SignedCompleteGraph(4, {{0, 1}})) == IntPolynomial{5, 0, -6, 0, 1});
  // all-positive K_n: (x - n + 1)(x + 1)^(n-1)
  CHECK(char_poly(SignedCompleteGraph(5, {})) == IntPolynomial::linear_root(4) * IntPolynomial{1, 1}.pow(4));
}

TEST_CASE("sturm counts") {
  const IntPolynomial p = IntPolynomial::linear_root(1).pow(2) * IntPolynomial::linear_root(-2);
  SturmSequence s(p);
  CHECK(s.count_all() == 2);
  CHECK(s.count(Rational(-3), Rational(0)) == 1);
  CHECK(s.count(Rational(0), Rational(1)) == 1);  // half-open at the right
  CHECK(s.count(Rational(1), Rational(5)) == 0);
  CHECK(sturm_root_count(IntPolynomial{-2, 0, 1}, Rational(0), Rational(2)) == 1);
}

TEST_CASE("largest root isolation") {
  const RootInterval r = largest_root(IntPolynomial{-2, 0, 1}, Rational(1, 1 << 20));
  CHECK(r.width() <= Rational(1, 1 << 20));
  CHECK(r.lo() * r.lo() < 2);
  CHECK(r.hi() * r.hi() >= 2);
  CHECK_THROWS_AS(largest_root(IntPolynomial{1, 0, 1}, Rational(1, 8)), Error);
  CHECK_NOTHROW(RootInterval::verified_largest(IntPolynomial{-2, 0, 1}, r.lo(), r.hi()));
  CHECK_THROWS_AS(RootInterval::verified_largest(IntPolynomial{-2, 0, 1}, Rational(-2), Rational(0)), Error);
}

TEST_CASE("all roots with multiplicity") {
  const IntPolynomial p = IntPolynomial::linear_root(1).pow(2) * IntPolynomial::linear_root(-2);
  const auto roots = all_roots(p, Rational(1, 1024));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].contains(Rational(1)));
  CHECK(roots[1].contains(Rational(1)));
  CHECK(roots[2].contains(Rational(-2)));
}

TEST_CASE("index of small signed complete graphs") {
  const RootInterval k4c4 = index(build_signed_complete(4, build_family(FamilySpec::cycle(4))), report_width());
  CHECK(k4c4.contains(Rational(3)));
  // all-positive K_n has index n - 1
  CHECK(index(SignedCompleteGraph(6, {}), report_width()).contains(Rational(5)));
}

TEST_CASE("exact comparisons") {
  auto embed = [](int n, FamilySpec s) { return build_signed_complete(n, build_family(s)); };
  CHECK(compare_indices(embed(5, FamilySpec::u1(4)), embed(5, FamilySpec::cycle(4))) == Comparison::Less);
  CHECK(compare_indices(embed(5, FamilySpec::cycle(4)), embed(5, FamilySpec::u1(4))) == Comparison::Greater);
  CHECK(compare_indices(embed(5, FamilySpec::q1(5)), embed(5, FamilySpec::u1(5))) == Comparison::Equal);
  // cospectral via switching, different polynomials never needed
  const SignedCompleteGraph g = embed(6, FamilySpec::u1(5));
  CHECK(compare_indices(g, switch_at(g, std::vector<Vertex>{1, 4})) == Comparison::Equal);
  CHECK(std::string(to_string(Comparison::Less)) == "Less");
}

TEST_CASE("jacobi eigensolver agrees with exact roots") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const SignedCompleteGraph g = random_signed(rng, 6);
    const FloatSpectrum s = numeric_spectrum(g);
    CHECK(s.residual < 1e-9);
    const RootInterval r = index(g, report_width());
    CHECK(s.eigenvalues[0] == doctest::Approx(r.midpoint().get_d()).epsilon(1e-9));
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) CHECK(s.eigenvalues[i - 1] >= s.eigenvalues[i]);
  }
  JacobiOptions strict;
  strict.max_sweeps = 0;
  CHECK_THROWS_AS(symmetric_eigen({0, 1, 1, 0}, 2, strict), Error);
}
