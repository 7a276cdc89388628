#include "oracle.hpp"

#include <spreadpoly/sequences.hpp>
#include <spreadpoly/surd.hpp>
#include <spreadpoly/verify.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace spreadpoly;

namespace {

QuadExt random_surd(std::mt19937& rng, const BigRat& d) {
  return {oracle::random_rational(rng), oracle::random_rational(rng), d};
}

}  // namespace

TEST(Surd, FieldArithmetic) {
  const QuadExt r5 = QuadExt::root(5);
  EXPECT_EQ(r5 * r5, QuadExt::rational(5, 5));
  const auto [g, gb] = characteristic_roots(1, 1);
  EXPECT_EQ(g * gb, QuadExt::rational(-1, 5));
  EXPECT_EQ(g + gb, QuadExt::rational(1, 5));
  EXPECT_EQ(pow(g, 2), (QuadExt{BigRat(3, 2), BigRat(1, 2), 5}));
  EXPECT_EQ(pow(g, 0), QuadExt::rational(1, 5));
  const QuadExt u{BigRat(3, 7), BigRat(-2), 5};
  EXPECT_EQ(conj(conj(u)), u);
  EXPECT_EQ((u / g) * g, u);
}

TEST(Surd, Errors) {
  EXPECT_THROW(QuadExt::root(5) + QuadExt::root(3), discriminant_mismatch);
  EXPECT_THROW(QuadExt::root(5) * QuadExt::root(3), discriminant_mismatch);
  EXPECT_THROW(QuadExt::root(5) / QuadExt::rational(0, 5), division_by_zero);
  // 3 - sqrt(9) is zero in disguise.
  EXPECT_THROW(QuadExt::root(9) / (QuadExt{3, -1, 9}), division_by_zero);
  EXPECT_THROW(binet_fibonacci(3, 2, -1), degenerate_discriminant);
  EXPECT_THROW(binet_z(3, 0, 0), degenerate_discriminant);
  EXPECT_THROW(check_root_relations(2, -1), degenerate_discriminant);
}

TEST(Surd, RationalValue) {
  EXPECT_EQ((QuadExt{BigRat(1, 2), BigRat(1, 2), 9}).rational_value(), BigRat(2));
  EXPECT_EQ((QuadExt{1, 1, BigRat(1, 4)}).rational_value(), BigRat(3, 2));
  EXPECT_FALSE(QuadExt::root(5).rational_value().has_value());
  EXPECT_FALSE(QuadExt::root(-4).rational_value().has_value());
}

TEST(Surd, BinetExamples) {
  EXPECT_EQ(binet_fibonacci(0, 3, 1), BigRat(0));
  EXPECT_EQ(binet_fibonacci(5, 1, 1), BigRat(5));
  EXPECT_EQ(binet_lucas(2, 1, 1), BigRat(3));
  EXPECT_EQ(binet_z(0, 1, 2), BigRat(0));
  EXPECT_EQ(binet_z(3, 1, 2), BigRat(49));
  EXPECT_EQ(binet_z(2, 1, 2), BigRat(9));
}

TEST(Surd, RootRelations) {
  const auto r = check_root_relations(1, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.alpha.rational_value(), BigRat(2));
  EXPECT_EQ(r.beta.rational_value(), BigRat(2));
  EXPECT_EQ(r.alpha_bar.rational_value(), BigRat(-1));
  EXPECT_EQ((-r.beta_bar).rational_value(), BigRat(-1));
  EXPECT_EQ((r.beta * r.beta_bar).rational_value(), BigRat(2));

  const auto r0 = check_root_relations(0, 1);
  EXPECT_TRUE(r0.passed());
  EXPECT_EQ(r0.alpha.rational_value(), BigRat(1));
  EXPECT_EQ(r0.alpha_bar.rational_value(), BigRat(-1));
  EXPECT_TRUE(cubic_expansion_holds());
}

TEST(SurdProperty, NormIsRational) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const BigRat d = oracle::random_rational(rng);
    const QuadExt u = random_surd(rng, d);
    EXPECT_EQ((u * conj(u)).b, 0);
    EXPECT_EQ((u * conj(u)).a, norm(u));
    EXPECT_EQ(pow(u, 2), u * u);
  }
}

TEST(SurdProperty, VietaOnCharacteristicRoots) {
  for (const auto& p : binet_sample_points(25)) {
    const auto [g, gb] = characteristic_roots(p.x, p.s);
    EXPECT_EQ(g + gb, QuadExt::rational(p.x, g.d));
    EXPECT_EQ(g * gb, QuadExt::rational(-p.s, g.d));
  }
}

TEST(SurdProperty, BinetMatchesRecurrence) {
  const auto f = fibonacci_sequence(50);
  const auto l = lucas_sequence(50);
  for (const auto& p : binet_sample_points(25)) {
    for (unsigned n = 0; n <= 50; ++n) {
      ASSERT_EQ(binet_fibonacci(n, p.x, p.s), evaluate(f[n], p.x, p.s)) << n;
      ASSERT_EQ(binet_lucas(n, p.x, p.s), evaluate(l[n], p.x, p.s)) << n;
    }
  }
}

TEST(SurdProperty, BinetZMatchesPolynomial) {
  const auto z = z_sequence(40);
  const auto grid = binet_z_grid();
  EXPECT_EQ(grid.size(), 26U);  // 28 grid points minus (0,0) and (2,-1)
  for (const auto& p : grid)
    for (unsigned n = 0; n <= 40; ++n) ASSERT_EQ(binet_z(n, p.x, p.s), evaluate(z[n], p.x * p.x, p.s)) << n;
}

TEST(SurdProperty, SamplePointsAreDeterministicAndNondegenerate) {
  const auto a = binet_sample_points(25);
  const auto b = binet_sample_points(25);
  ASSERT_EQ(a.size(), 25U);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].s, b[i].s);
    EXPECT_NE(a[i].x * a[i].x + 4 * a[i].s, 0);
    EXPECT_LE(abs(a[i].x.get_num()), 20);
    EXPECT_LE(a[i].x.get_den(), 20);
  }
}
