#pragma once

// Executable checks of the identities relating the Fibonacci, Lucas,
// Chebyshev and spread polynomials. Each check takes a single index and
// reports a witness on failure; callers sweep the index range.
//
// Every polynomial identity compares polynomials obtained by different
// constructions, so a pass never reduces to comparing a value with itself.

#include <spreadpoly/number.hpp>
#include <spreadpoly/poly.hpp>
#include <spreadpoly/sequences.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace spreadpoly {

struct Witness {
  unsigned index = 0;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct CheckResult {
  std::string name;
  std::string range;
  bool passed = true;
  std::optional<Witness> witness;  // set iff !passed
};

/// Witness renderings are cut after this many terms.
inline constexpr std::size_t witness_terms = 40;

namespace detail {

inline CheckResult pass(std::string name, unsigned n) { return {std::move(name), "n=" + std::to_string(n), true, {}}; }

inline CheckResult fail(std::string name, unsigned n, std::string lhs, std::string rhs, std::string note = {}) {
  return {std::move(name), "n=" + std::to_string(n), false, Witness{n, std::move(lhs), std::move(rhs), std::move(note)}};
}

template <class P>
CheckResult compare(std::string name, unsigned n, const P& lhs, const P& rhs, std::string note = {}) {
  if (lhs == rhs) return pass(std::move(name), n);
  return fail(std::move(name), n, to_string(lhs, witness_terms), to_string(rhs, witness_terms), std::move(note));
}

inline void require_positive(const char* check, unsigned n) {
  if (n == 0) throw range_error(std::string(check) + ": n must be >= 1");
}

}  // namespace detail

/// F_n^2 - F_{n-1} F_{n+1} = (-s)^(n-1).
inline CheckResult check_cassini(unsigned n) {
  detail::require_positive("check_cassini", n);
  const std::vector<BiPoly> f = fibonacci_sequence(n + 1);
  const BiPoly lhs = f[n] * f[n] - f[n - 1] * f[n + 1];
  const BiPoly rhs = BiPoly::term({0, n - 1}, sign_power(n - 1));
  return detail::compare("cassini", n, lhs, rhs);
}

/// Z_{n-1} Z_{n+1} = (Z_n - s^(n-1) x)^2.
inline CheckResult check_z_cassini(unsigned n) {
  detail::require_positive("check_z_cassini", n);
  const std::vector<BiPoly> z = z_sequence(n + 1);
  const BiPoly lhs = z[n - 1] * z[n + 1];
  const BiPoly inner = z_polynomial(n, z_method::closed) - BiPoly::term({1, n - 1});
  return detail::compare("z_cassini", n, lhs, inner * inner);
}

enum class parity { even, odd };

/// even: sum_{j=0}^n (-s)^j C(2n, j) L_{2n-2j} = x^(2n) + (-s)^n C(2n, n)
/// odd:  sum_{j=0}^n (-s)^j C(2n+1, j) L_{2n+1-2j} = x^(2n+1)
inline CheckResult check_lucas_binomial(unsigned n, parity p) {
  const unsigned m = p == parity::even ? 2 * n : 2 * n + 1;
  const std::vector<BiPoly> l = lucas_sequence(m);
  BiPoly lhs;
  for (unsigned j = 0; j <= n; ++j) lhs += BiPoly::term({0, j}, sign_power(j) * BigRat(binomial(m, j))) * l[m - 2 * j];
  BiPoly rhs = BiPoly::term({m, 0});
  if (p == parity::even) rhs += BiPoly::term({0, n}, sign_power(n) * BigRat(binomial(2 * n, n)));
  return detail::compare(p == parity::even ? "lucas_binomial_even" : "lucas_binomial_odd", n, lhs, rhs);
}

/// sum_{j=0}^n (-s)^j C(2n, j) Z_{n-j} = x^n. Fails at n = 0, where the
/// left side is Z_0 = 0 and the right side is 1; valid from n = 1 on.
inline CheckResult check_z_binomial(unsigned n) {
  const std::vector<BiPoly> z = z_sequence(n);
  BiPoly lhs;
  for (unsigned j = 0; j <= n; ++j) lhs += BiPoly::term({0, j}, sign_power(j) * BigRat(binomial(2 * n, j))) * z[n - j];
  return detail::compare("z_binomial", n, lhs, BiPoly::term({n, 0}), n == 0 ? "n = 0 boundary: Z_0 = 0 but x^0 = 1" : "");
}

/// Z_n(x) = (-1)^(n-1) Z_n(x, -1) and Z_n(x, s) = -s^n Z_n(-x/s), the
/// latter compared coefficient-wise.
inline CheckResult check_symmetry(unsigned n) {
  detail::require_positive("check_symmetry", n);
  const UniPoly zx = spread_z_univariate(n, spread_method::via_l);
  const BiPoly zxs = z_polynomial(n);
  const UniPoly specialized = sign_power(n - 1) * specialize_s(zxs, -1);
  if (zx != specialized)
    return detail::fail("symmetry", n, to_string(zx, witness_terms), to_string(specialized, witness_terms),
                        "Z_n(x) vs (-1)^(n-1) Z_n(x,-1)");
  BiPoly rebuilt;
  for (const auto& [k, a] : zx.terms()) {
    if (k > n) return detail::fail("symmetry", n, to_string(zx, witness_terms), "degree <= n", "deg Z_n(x) exceeds n");
    rebuilt.add_term({k, n - k}, -a * sign_power(k));
  }
  return detail::compare("symmetry", n, rebuilt, zxs, "-s^n Z_n(-x/s) vs Z_n(x,s)");
}

/// The four closed expressions for c(n, k) agree for every 1 <= k <= n.
inline CheckResult check_coefficient_forms(unsigned n) {
  detail::require_positive("check_coefficient_forms", n);
  for (unsigned k = 1; k <= n; ++k) {
    const BigInt reference = coefficient_c(n, k, all_c_forms.front());
    for (c_form f : all_c_forms) {
      const BigInt v = coefficient_c(n, k, f);
      if (v != reference)
        return detail::fail("coefficient_forms", n, to_string(reference), to_string(v),
                            "k=" + std::to_string(k) + ": " + std::string(name(all_c_forms.front())) + " vs " +
                                std::string(name(f)));
    }
  }
  return detail::pass("coefficient_forms", n);
}

/// Compensated Horner evaluation (error-free TwoSum/TwoProd transforms);
/// as accurate as Horner in twice the working precision. `coeffs[i]` is the
/// coefficient of x^i.
inline double compensated_horner(const std::vector<double>& coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  double acc = coeffs.back();
  double comp = 0.0;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    const double p = acc * x;
    const double p_err = std::fma(acc, x, -p);
    const double sum = p + coeffs[i];
    const double z = sum - p;
    const double s_err = (p - (sum - z)) + (coeffs[i] - z);
    acc = sum;
    comp = comp * x + (p_err + s_err);
  }
  return acc + comp;
}

inline std::vector<double> dense_coefficients(const UniPoly& p) {
  std::vector<double> out(p.is_zero() ? 0 : degree(p) + 1, 0.0);
  for (const auto& [deg, c] : p.terms()) out[deg] = c.get_d();
  return out;
}

struct trig_errors {
  double z_max = 0.0;  // max |Z_n(4 sin^2 t) - 4 sin^2(n t)|
  double s_max = 0.0;  // max |S_n(sin^2 t) - sin^2(n t)|
};

/// Sample angles t_i = i (pi/2) / (samples + 1), i = 1..samples.
inline trig_errors trig_max_error(unsigned n, unsigned samples) {
  const std::vector<double> z = dense_coefficients(spread_z_univariate(n));
  const std::vector<double> s = dense_coefficients(wildberger_spread(n));
  trig_errors e;
  for (unsigned i = 1; i <= samples; ++i) {
    const double t = i * (std::numbers::pi / 2) / (samples + 1);
    const double sin_t = std::sin(t);
    const double sin_nt = std::sin(n * t);
    const double u = sin_t * sin_t;
    const double target = sin_nt * sin_nt;
    e.z_max = std::max(e.z_max, std::abs(compensated_horner(z, 4 * u) - 4 * target));
    e.s_max = std::max(e.s_max, std::abs(compensated_horner(s, u) - target));
  }
  return e;
}

/// Z_n(4 sin^2 t) = 4 sin^2(n t) and S_n(sin^2 t) = sin^2(n t) in double
/// precision, within `tol` at every sample.
inline CheckResult check_trig(unsigned n, unsigned samples = 100, double tol = 1e-9) {
  const trig_errors e = trig_max_error(n, samples);
  if (e.z_max < tol && e.s_max < tol) return detail::pass("trig", n);
  std::ostringstream z_err;
  std::ostringstream s_err;
  z_err << "max |Z_n(4sin^2 t) - 4sin^2(nt)| = " << e.z_max;
  s_err << "max |S_n(sin^2 t) - sin^2(nt)| = " << e.s_max;
  std::ostringstream tol_text;
  tol_text << "tolerance " << tol;
  return detail::fail("trig", n, z_err.str(), s_err.str(), tol_text.str());
}

/// 2 T_n((x+2)/2) - 2 = l_n(x+2) - 2 = -Z_n(-x) = Z_n(x, 1), and
/// 2 T_n(x) = l_n(2x).
inline CheckResult check_chebyshev_bala(unsigned n) {
  detail::require_positive("check_chebyshev_bala", n);
  const UniPoly x = poly::ux();
  const UniPoly two(BigRat(2));
  const UniPoly t = chebyshev_t(n);
  const UniPoly l = univariate_l(n);
  const UniPoly via_t = BigRat(2) * compose_univariate(t, (x + two) * BigRat(1, 2)) - two;
  const UniPoly via_l = compose_univariate(l, x + two) - two;
  const UniPoly via_zx = -scale_variable(spread_z_univariate(n, spread_method::via_l2n), -1);
  const UniPoly via_zxs = specialize_s(z_polynomial(n), 1);
  if (via_t != via_l) return detail::compare("chebyshev", n, via_t, via_l, "2T_n((x+2)/2) - 2 vs l_n(x+2) - 2");
  if (via_l != via_zx) return detail::compare("chebyshev", n, via_l, via_zx, "l_n(x+2) - 2 vs -Z_n(-x)");
  if (via_zx != via_zxs) return detail::compare("chebyshev", n, via_zx, via_zxs, "-Z_n(-x) vs Z_n(x,1)");
  return detail::compare("chebyshev", n, BigRat(2) * t, compose_univariate(l, UniPoly::term(1U, 2)),
                         "2T_n(x) vs l_n(2x)");
}

/// l_{2n}(x) = l_n(x^2 - 2), together with the l_{2n}(sqrt x) form of Z_n(x)
/// against 2 - l_n(2 - x).
inline CheckResult check_l_doubling(unsigned n) {
  detail::require_positive("check_l_doubling", n);
  const UniPoly x = poly::ux();
  const UniPoly lhs = univariate_l(2 * n);
  const UniPoly rhs = compose_univariate(univariate_l(n), x * x - UniPoly(BigRat(2)));
  if (lhs != rhs) return detail::compare("doubling", n, lhs, rhs, "l_2n(x) vs l_n(x^2-2)");
  return detail::compare("doubling", n, spread_z_univariate(n, spread_method::via_l2n),
                         spread_z_univariate(n, spread_method::via_l), "Z_n(x) via l_2n vs via l_n");
}

/// All constructions of Z_n(x, s) agree with the recurrence.
inline CheckResult check_z_methods(unsigned n) {
  const BiPoly reference = z_polynomial(n, z_method::recurrence);
  for (z_method m : all_z_methods) {
    if (m == z_method::recurrence) continue;
    const BiPoly p = z_polynomial(n, m);
    if (p != reference)
      return detail::compare("z_methods", n, reference, p, "recurrence vs " + std::string(name(m)));
  }
  return detail::pass("z_methods", n);
}

inline CheckResult check_fibonacci_methods(unsigned n) {
  return detail::compare("fibonacci_methods", n, fibonacci(n, fib_method::recurrence), fibonacci(n, fib_method::closed),
                         "recurrence vs closed");
}

/// from_fib is only defined for n >= 1 and is skipped at n = 0.
inline CheckResult check_lucas_methods(unsigned n) {
  const BiPoly reference = lucas(n, lucas_method::recurrence);
  for (lucas_method m : all_lucas_methods) {
    if (m == lucas_method::recurrence || (m == lucas_method::from_fib && n == 0)) continue;
    const BiPoly p = lucas(n, m);
    if (p != reference)
      return detail::compare("lucas_methods", n, reference, p, "recurrence vs " + std::string(name(m)));
  }
  return detail::pass("lucas_methods", n);
}

inline CheckResult check_spread_methods(unsigned n) {
  const UniPoly reference = spread_z_univariate(n, spread_method::via_l);
  for (spread_method m : all_spread_methods) {
    if (m == spread_method::via_l) continue;
    const UniPoly p = spread_z_univariate(n, m);
    if (p != reference)
      return detail::compare("spread_methods", n, reference, p, "via_l vs " + std::string(name(m)));
  }
  return detail::pass("spread_methods", n);
}

}  // namespace spreadpoly
