#pragma once

// Exact arithmetic in Q(sqrt d) for the Binet formulae and the root
// relations between the characteristic roots.

#include <spreadpoly/number.hpp>
#include <spreadpoly/poly.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spreadpoly {

class discriminant_mismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class division_by_zero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class degenerate_discriminant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// a + b*sqrt(d). No square-free reduction of d is performed, so with a
/// square d two equal numbers may have different representations.
struct QuadExt {
  BigRat a;
  BigRat b;
  BigRat d;

  static QuadExt rational(const BigRat& value, const BigRat& d) { return {value, 0, d}; }
  static QuadExt root(const BigRat& d) { return {0, 1, d}; }

  bool is_zero() const { return a == 0 && b == 0; }

  /// Exact rational value, available when b = 0 or d is a perfect square.
  std::optional<BigRat> rational_value() const {
    if (b == 0) return a;
    if (d < 0) return std::nullopt;
    BigInt num = d.get_num();
    BigInt den = d.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    BigInt rn = sqrt(num);
    BigInt rd = sqrt(den);
    BigRat r(rn, rd);
    r.canonicalize();
    return a + b * r;
  }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;
};

namespace detail {

inline void require_same_field(const QuadExt& u, const QuadExt& v) {
  if (u.d != v.d) throw discriminant_mismatch("surd arithmetic across sqrt(" + to_string(u.d) + ") and sqrt(" + to_string(v.d) + ")");
}

}  // namespace detail

inline QuadExt operator+(const QuadExt& u, const QuadExt& v) {
  detail::require_same_field(u, v);
  return {u.a + v.a, u.b + v.b, u.d};
}

inline QuadExt operator-(const QuadExt& u, const QuadExt& v) {
  detail::require_same_field(u, v);
  return {u.a - v.a, u.b - v.b, u.d};
}

inline QuadExt operator-(const QuadExt& u) { return {-u.a, -u.b, u.d}; }

inline QuadExt operator*(const QuadExt& u, const QuadExt& v) {
  detail::require_same_field(u, v);
  return {u.a * v.a + u.b * v.b * u.d, u.a * v.b + u.b * v.a, u.d};
}

inline QuadExt operator*(const BigRat& k, const QuadExt& u) { return {k * u.a, k * u.b, u.d}; }

inline QuadExt conj(const QuadExt& u) { return {u.a, -u.b, u.d}; }

/// a^2 - b^2 d, always rational.
inline BigRat norm(const QuadExt& u) { return u.a * u.a - u.b * u.b * u.d; }

inline QuadExt operator/(const QuadExt& u, const QuadExt& v) {
  detail::require_same_field(u, v);
  const BigRat n = norm(v);
  // n == 0 also covers zero divisors a = +-b*sqrt(d) when d is a square.
  if (n == 0) throw division_by_zero("surd division by zero");
  const QuadExt p = u * conj(v);
  return {p.a / n, p.b / n, u.d};
}

inline QuadExt pow(const QuadExt& u, std::uint64_t n) {
  QuadExt result = QuadExt::rational(1, u.d);
  QuadExt base = u;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

/// The characteristic roots (x + sqrt(x^2+4s))/2 and its conjugate of
/// z^2 - x z - s, with sqrt(x^2+4s) adjoined symbolically.
struct root_pair {
  QuadExt gamma;
  QuadExt gamma_bar;
};

inline root_pair characteristic_roots(const BigRat& x0, const BigRat& s0) {
  const BigRat d = x0 * x0 + 4 * s0;
  if (d == 0) throw degenerate_discriminant("repeated characteristic root: x^2 + 4s = 0");
  const BigRat half(1, 2);
  QuadExt g{x0 * half, half, d};
  return {g, conj(g)};
}

/// F_n(x0, s0) = (g^n - gb^n) / (g - gb).
inline BigRat binet_fibonacci(std::uint64_t n, const BigRat& x0, const BigRat& s0) {
  const auto [g, gb] = characteristic_roots(x0, s0);
  const QuadExt v = (pow(g, n) - pow(gb, n)) / (g - gb);
  if (v.b != 0) throw std::logic_error("binet_fibonacci: irrational part did not cancel");
  return v.a;
}

/// L_n(x0, s0) = g^n + gb^n.
inline BigRat binet_lucas(std::uint64_t n, const BigRat& x0, const BigRat& s0) {
  const auto [g, gb] = characteristic_roots(x0, s0);
  const QuadExt v = pow(g, n) + pow(gb, n);
  if (v.b != 0) throw std::logic_error("binet_lucas: irrational part did not cancel");
  return v.a;
}

/// Z_n(q^2, s0) = a^(2n) + ab^(2n) - 2 s0^n with a, ab the roots of
/// z^2 - q z - s0.
inline BigRat binet_z(std::uint64_t n, const BigRat& q, const BigRat& s0) {
  const auto [alpha, alpha_bar] = characteristic_roots(q, s0);
  const QuadExt v = pow(alpha, 2 * n) + pow(alpha_bar, 2 * n);
  if (v.b != 0) throw std::logic_error("binet_z: irrational part did not cancel");
  return v.a - 2 * rat_pow(s0, n);
}

struct root_relation_report {
  QuadExt alpha, alpha_bar, beta, beta_bar;
  bool alpha_equals_beta = false;
  bool alpha_bar_equals_minus_beta_bar = false;
  bool beta_product_is_s = false;
  bool betas_solve_quadratic = false;
  bool alpha_squared_solves_quadratic = false;
  bool cubic_expansion = false;

  bool passed() const {
    return alpha_equals_beta && alpha_bar_equals_minus_beta_bar && beta_product_is_s && betas_solve_quadratic &&
           alpha_squared_solves_quadratic && cubic_expansion;
  }
};

/// (z - s)(z^2 - (x+2s) z + s^2) == z^3 - (x+3s) z^2 + s(x+3s) z - s^3 with
/// x and s symbolic; polynomials in z are coefficient lists.
inline bool cubic_expansion_holds() {
  using poly::s;
  using poly::x;
  const BiPoly one(BigRat(1));
  const std::vector<BiPoly> linear{-s(), one};
  const std::vector<BiPoly> quadratic{s() * s(), -(x() + BigRat(2) * s()), one};
  const BiPoly x3s = x() + BigRat(3) * s();
  const std::vector<BiPoly> cubic{-pow(s(), 3), s() * x3s, -x3s, one};
  return convolve(linear, quadratic) == cubic;
}

/// Checks, at x = q^2, that a = b, ab = -bb and b*bb = s, where a, ab are
/// the roots of z^2 - q z - s and b, bb those of z^2 - sqrt(x+4s) z + s; also
/// that a^2 solves z^2 - (x+2s) z + s^2 and the companion cubic expansion.
inline root_relation_report check_root_relations(const BigRat& q, const BigRat& s0) {
  const BigRat x0 = q * q;
  const BigRat d = x0 + 4 * s0;
  if (d == 0) throw degenerate_discriminant("repeated characteristic root: x + 4s = 0");
  root_relation_report r;
  const auto [alpha, alpha_bar] = characteristic_roots(q, s0);
  r.alpha = alpha;
  r.alpha_bar = alpha_bar;
  // b = (sqrt(x+4s) + sqrt((x+4s) - 4s)) / 2 with sqrt(x) taken as q.
  const BigRat half(1, 2);
  r.beta = QuadExt{q * half, half, d};
  r.beta_bar = QuadExt{-q * half, half, d};
  r.alpha_equals_beta = alpha == r.beta;
  r.alpha_bar_equals_minus_beta_bar = alpha_bar == -r.beta_bar;
  r.beta_product_is_s = r.beta * r.beta_bar == QuadExt::rational(s0, d);
  const QuadExt s_elem = QuadExt::rational(s0, d);
  const QuadExt sqrt_d = QuadExt::root(d);
  r.betas_solve_quadratic = (r.beta * r.beta - sqrt_d * r.beta + s_elem).is_zero() &&
                            (r.beta_bar * r.beta_bar - sqrt_d * r.beta_bar + s_elem).is_zero();
  const QuadExt a2 = alpha * alpha;
  const QuadExt residual = a2 * a2 - BigRat(x0 + 2 * s0) * a2 + QuadExt::rational(s0 * s0, d);
  r.alpha_squared_solves_quadratic = residual.is_zero();
  r.cubic_expansion = cubic_expansion_holds();
  return r;
}

}  // namespace spreadpoly
