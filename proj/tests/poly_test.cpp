#include "oracle.hpp"

#include <spreadpoly/poly.hpp>
#include <spreadpoly/sequences.hpp>

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace spreadpoly;
using poly::s;
using poly::x;

namespace {

BiPoly bp(std::initializer_list<std::pair<bi_monomial, BigRat>> terms) { return BiPoly(terms); }

}  // namespace

TEST(Number, ParseRational) {
  EXPECT_EQ(parse_rational("3"), BigRat(3));
  EXPECT_EQ(parse_rational("-6/4"), BigRat(-3, 2));
  EXPECT_EQ(parse_rational("+10/5"), BigRat(2));
  EXPECT_EQ(to_string(parse_rational("8/12")), "2/3");
  EXPECT_THROW(parse_rational("4/-2"), parse_error);
  EXPECT_THROW(parse_rational("1/0"), parse_error);
  EXPECT_THROW(parse_rational("abc"), parse_error);
  EXPECT_THROW(parse_rational("1/"), parse_error);
  EXPECT_THROW(parse_rational(""), parse_error);
  EXPECT_THROW(parse_rational("1.5"), parse_error);
}

TEST(Number, BinomialMatchesPascal) {
  const auto t = oracle::pascal(60);
  for (unsigned n = 0; n <= 60; ++n)
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), t[n][k]) << n << "," << k;
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Poly, CanonicalFormDropsZeros) {
  BiPoly p = x() - x();
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(to_string(p), "0");
  EXPECT_EQ(x() + BiPoly{}, x());
}

TEST(Poly, RingExamples) {
  EXPECT_EQ(x() * (BigRat(4) * s() * x() + x() * x()), bp({{{2, 1}, 4}, {{3, 0}, 1}}));
  EXPECT_EQ(-x() + x(), BiPoly{});
  EXPECT_EQ(x() * BigRat(0), BiPoly{});
  EXPECT_EQ(BigRat(1, 2) * (BigRat(2) * s()), s());
}

TEST(Poly, Pow) {
  EXPECT_EQ(pow(x() + s(), 0), BiPoly(BigRat(1)));
  EXPECT_EQ(pow(BiPoly{}, 0), BiPoly(BigRat(1)));
  EXPECT_EQ(pow(x() + s(), 2), x() * x() + BigRat(2) * s() * x() + s() * s());
  // F_3 = x^2 + s
  const BiPoly f3 = x() * x() + s();
  EXPECT_EQ(pow(f3, 2), bp({{{4, 0}, 1}, {{2, 1}, 2}, {{0, 2}, 1}}));
}

TEST(Poly, Evaluate) {
  EXPECT_EQ(evaluate(x(), 1, 2), BigRat(1));
  EXPECT_EQ(evaluate(BiPoly{}, 5, 7), BigRat(0));
  const BiPoly z2 = BigRat(4) * s() * x() + x() * x();
  EXPECT_EQ(evaluate(z2, 1, 2), BigRat(9));
  const UniPoly u{{3U, BigRat(2)}, {1U, BigRat(-3)}, {0U, BigRat(1)}};
  EXPECT_EQ(evaluate(u, BigRat(1, 2)), BigRat(1, 4) - BigRat(3, 2) + 1);
  EXPECT_EQ(evaluate(UniPoly{}, 3), BigRat(0));
  EXPECT_EQ(evaluate(UniPoly::term(4U), 2), BigRat(16));
}

TEST(Poly, EvenSubstitute) {
  // y^4 + 2 s y^2 with y^2 -> x
  const BiPoly p = bp({{{4, 0}, 1}, {{2, 1}, 2}});
  EXPECT_EQ(even_substitute(p, x()), x() * x() + BigRat(2) * s() * x());
  // L_2 = y^2 + 2s
  EXPECT_EQ(even_substitute(lucas(2), x()), x() + BigRat(2) * s());
  EXPECT_THROW(even_substitute(BiPoly::term({3, 0}), x()), odd_degree_error);
  EXPECT_THROW(even_substitute(UniPoly::term(1U), poly::ux()), odd_degree_error);
  // Non-monomial substitution, y^2 -> x + 4s
  EXPECT_EQ(even_substitute(BiPoly::term({4, 1}), x() + BigRat(4) * s()), s() * pow(x() + BigRat(4) * s(), 2));
}

TEST(Poly, Compose) {
  const UniPoly xx = poly::ux();
  const UniPoly p{{5U, BigRat(1)}, {2U, BigRat(-7)}, {0U, BigRat(3)}};
  EXPECT_EQ(compose_univariate(p, xx), p);
  const UniPoly l2 = xx * xx - UniPoly(BigRat(2));
  const UniPoly c = compose_univariate(l2, UniPoly(BigRat(2)) - xx);
  EXPECT_EQ(c, xx * xx - BigRat(4) * xx + UniPoly(BigRat(2)));
  EXPECT_EQ(UniPoly(BigRat(2)) - c, BigRat(4) * xx - xx * xx);
  EXPECT_EQ(compose_univariate(xx, xx + UniPoly(BigRat(2))), xx + UniPoly(BigRat(2)));
  EXPECT_EQ(compose_univariate(UniPoly{}, xx), UniPoly{});
}

TEST(Poly, WeightedDegree) {
  const BiPoly z3 = bp({{{1, 2}, 9}, {{2, 1}, 6}, {{3, 0}, 1}});
  EXPECT_EQ(weighted_degree(z3, 1, 1), (weight_info{3, true}));
  const BiPoly f4 = bp({{{3, 0}, 1}, {{1, 1}, 2}});
  EXPECT_EQ(weighted_degree(f4, 1, 2), (weight_info{3, true}));
  EXPECT_EQ(weighted_degree(x() + s() * s(), 1, 1), (weight_info{2, false}));
  EXPECT_THROW(weighted_degree(BiPoly{}, 1, 1), zero_polynomial_error);
  EXPECT_THROW(degree(UniPoly{}), zero_polynomial_error);
}

TEST(Poly, Rendering) {
  const BiPoly z3 = bp({{{1, 2}, 9}, {{2, 1}, 6}, {{3, 0}, 1}});
  EXPECT_EQ(to_string(z3), "x^3 + 6*s*x^2 + 9*s^2*x");
  EXPECT_EQ(to_string(BiPoly(BigRat(2))), "2");
  EXPECT_EQ(to_string(BiPoly(BigRat(-1))), "-1");
  EXPECT_EQ(to_string(-x() + BigRat(2) * s() * s()), "-x + 2*s^2");
  EXPECT_EQ(to_string(BigRat(1, 2) * x() - s()), "1/2*x - s");
  const UniPoly z5{{5U, BigRat(1)}, {4U, BigRat(-10)}, {3U, BigRat(35)}, {2U, BigRat(-50)}, {1U, BigRat(25)}};
  EXPECT_EQ(to_string(z5), "x^5 - 10*x^4 + 35*x^3 - 50*x^2 + 25*x");
  EXPECT_EQ(to_string(z5, 2), "x^5 - 10*x^4 + ... (3 more terms)");
}

TEST(Poly, SpecializeAndScale) {
  const BiPoly z2 = BigRat(4) * s() * x() + x() * x();
  EXPECT_EQ(specialize_s(z2, -1), UniPoly::term(2U) - BigRat(4) * poly::ux());
  EXPECT_EQ(scale_variables(z2, 1, -1), x() * x() - BigRat(4) * s() * x());
  EXPECT_EQ(scale_variable(UniPoly::term(2U), 4), UniPoly::term(2U, 16));
  EXPECT_EQ(lift(UniPoly::term(3U, 5)), BiPoly::term({3, 0}, 5));
  EXPECT_TRUE(is_integral(z2));
  EXPECT_FALSE(is_integral(BigRat(1, 3) * x()));
}

// Ring axioms and the evaluation homomorphism on random small polynomials,
// with products checked against dense-grid multiplication.
TEST(PolyProperty, RingAxiomsAgainstDenseOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const BiPoly p = oracle::random_poly(rng);
    const BiPoly q = oracle::random_poly(rng);
    const BiPoly r = oracle::random_poly(rng);
    EXPECT_EQ(p * q, oracle::to_sparse(oracle::mul(oracle::from_sparse(p), oracle::from_sparse(q))));
    EXPECT_EQ(p + q, oracle::to_sparse(oracle::add(oracle::from_sparse(p), oracle::from_sparse(q))));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p - p, BiPoly{});
    const BiPoly pq = p * q;
    for (const auto& [m, c] : pq.terms()) EXPECT_NE(c, 0);
    const BigRat a = oracle::random_rational(rng);
    const BigRat b = oracle::random_rational(rng);
    EXPECT_EQ(evaluate(p * q, a, b), evaluate(p, a, b) * evaluate(q, a, b));
    EXPECT_EQ(evaluate(p + q, a, b), evaluate(p, a, b) + evaluate(q, a, b));
  }
}

// Squaring the first variable and substituting it back is the identity.
TEST(PolyProperty, EvenSubstituteRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly p = oracle::random_poly(rng);
    BiPoly doubled;
    for (const auto& [m, c] : p.terms()) doubled.add_term({2 * m.x, m.s}, c);
    EXPECT_EQ(even_substitute(doubled, x()), p);
  }
}

TEST(PolyProperty, HomogeneousWeights) {
  const auto z = z_sequence(100);
  const auto f = fibonacci_sequence(101);
  const auto l = lucas_sequence(100);
  for (unsigned n = 1; n <= 100; ++n) {
    EXPECT_EQ(weighted_degree(z[n], 1, 1), (weight_info{n, true})) << n;
    EXPECT_EQ(weighted_degree(f[n], 1, 2), (weight_info{n - 1, true})) << n;
    EXPECT_EQ(weighted_degree(l[n], 1, 2), (weight_info{n, true})) << n;
  }
}

TEST(PolyProperty, SharedAcrossThreads) {
  const BiPoly z = z_polynomial(40);
  BiPoly a;
  BiPoly b;
  std::thread t1([&] { a = z * z; });
  std::thread t2([&] { b = z * z; });
  t1.join();
  t2.join();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, pow(z, 2));
}
