#pragma once

// Test-only reference arithmetic on dense coefficient grids, kept separate
// from the sparse map representation it is used to check.

#include <spreadpoly/poly.hpp>

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using spreadpoly::BigInt;
using spreadpoly::BigRat;
using spreadpoly::BiPoly;

// c[i][j] is the coefficient of x^i s^j.
struct Dense {
  std::vector<std::vector<BigRat>> c;

  BigRat at(std::size_t i, std::size_t j) const {
    return (i < c.size() && j < c[i].size()) ? c[i][j] : BigRat(0);
  }
  void add(std::size_t i, std::size_t j, const BigRat& v) {
    if (c.size() <= i) c.resize(i + 1);
    if (c[i].size() <= j) c[i].resize(j + 1);
    c[i][j] += v;
  }
};

inline Dense from_sparse(const BiPoly& p) {
  Dense d;
  for (const auto& [m, v] : p.terms()) d.add(m.x, m.s, v);
  return d;
}

inline BiPoly to_sparse(const Dense& d) {
  BiPoly p;
  for (std::size_t i = 0; i < d.c.size(); ++i)
    for (std::size_t j = 0; j < d.c[i].size(); ++j) p.add_term({unsigned(i), unsigned(j)}, d.c[i][j]);
  return p;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < a.c[i].size(); ++j)
      for (std::size_t k = 0; k < b.c.size(); ++k)
        for (std::size_t l = 0; l < b.c[k].size(); ++l) out.add(i + k, j + l, a.c[i][j] * b.c[k][l]);
  return out;
}

inline Dense add(const Dense& a, const Dense& b, int sign = 1) {
  Dense out = a;
  for (std::size_t i = 0; i < b.c.size(); ++i)
    for (std::size_t j = 0; j < b.c[i].size(); ++j) out.add(i, j, b.c[i][j] * sign);
  return out;
}

// a_n = x a_{n-1} + s a_{n-2} on dense grids.
inline Dense dense_recurrence(unsigned n, Dense a0, Dense a1) {
  if (n == 0) return a0;
  Dense x;
  x.add(1, 0, 1);
  Dense s;
  s.add(0, 1, 1);
  for (unsigned i = 2; i <= n; ++i) {
    Dense next = add(mul(x, a1), mul(s, a0));
    a0 = std::move(a1);
    a1 = std::move(next);
  }
  return a1;
}

inline BiPoly fibonacci(unsigned n) {
  Dense one;
  one.add(0, 0, 1);
  return to_sparse(dense_recurrence(n, Dense{}, one));
}

inline BiPoly lucas(unsigned n) {
  Dense two;
  two.add(0, 0, 2);
  Dense x;
  x.add(1, 0, 1);
  return to_sparse(dense_recurrence(n, two, x));
}

// Pascal's rule, independent of the multiplicative formula.
inline std::vector<std::vector<BigInt>> pascal(unsigned rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (unsigned n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

// Up to max_terms terms, degrees <= 4, integer coefficients in [-9, 9].
inline BiPoly random_poly(std::mt19937& rng, unsigned max_terms = 5) {
  std::uniform_int_distribution<unsigned> count(0, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, 4);
  std::uniform_int_distribution<int> coef(-9, 9);
  BiPoly p;
  const unsigned n = count(rng);
  for (unsigned i = 0; i < n; ++i) p.add_term({deg(rng), deg(rng)}, coef(rng));
  return p;
}

inline BigRat random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  BigRat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace oracle
