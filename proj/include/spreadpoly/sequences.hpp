#pragma once

// Constructors for the Fibonacci, Lucas and spread polynomial families. Most
// families can be built several independent ways so the results can be
// checked against each other.

#include <spreadpoly/number.hpp>
#include <spreadpoly/poly.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spreadpoly {

class index_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class fib_method { recurrence, closed };
enum class lucas_method { recurrence, closed, from_fib };
enum class z_method { recurrence, closed, via_lucas, via_fib, parity };
enum class spread_method { via_l, via_l2n, from_bivariate };
enum class c_form { ratio_binomial, ratio_binomial_alt, sum_binomials, product };

inline constexpr std::array all_fib_methods{fib_method::recurrence, fib_method::closed};
inline constexpr std::array all_lucas_methods{lucas_method::recurrence, lucas_method::closed, lucas_method::from_fib};
inline constexpr std::array all_z_methods{z_method::recurrence, z_method::closed, z_method::via_lucas, z_method::via_fib,
                                          z_method::parity};
inline constexpr std::array all_spread_methods{spread_method::via_l, spread_method::via_l2n, spread_method::from_bivariate};
inline constexpr std::array all_c_forms{c_form::ratio_binomial, c_form::ratio_binomial_alt, c_form::sum_binomials,
                                        c_form::product};

constexpr std::string_view name(fib_method m) { return m == fib_method::recurrence ? "recurrence" : "closed"; }

constexpr std::string_view name(lucas_method m) {
  switch (m) {
    case lucas_method::recurrence: return "recurrence";
    case lucas_method::closed: return "closed";
    case lucas_method::from_fib: return "from_fib";
  }
  return "?";
}

constexpr std::string_view name(z_method m) {
  switch (m) {
    case z_method::recurrence: return "recurrence";
    case z_method::closed: return "closed";
    case z_method::via_lucas: return "via_lucas";
    case z_method::via_fib: return "via_fib";
    case z_method::parity: return "parity";
  }
  return "?";
}

constexpr std::string_view name(spread_method m) {
  switch (m) {
    case spread_method::via_l: return "via_l";
    case spread_method::via_l2n: return "via_l2n";
    case spread_method::from_bivariate: return "from_bivariate";
  }
  return "?";
}

constexpr std::string_view name(c_form f) {
  switch (f) {
    case c_form::ratio_binomial: return "ratio_binomial";
    case c_form::ratio_binomial_alt: return "ratio_binomial_alt";
    case c_form::sum_binomials: return "sum_binomials";
    case c_form::product: return "product";
  }
  return "?";
}

/// Reverse of name(): looks `text` up among `methods`.
template <class Method, std::size_t N>
std::optional<Method> parse_method(std::string_view text, const std::array<Method, N>& methods) {
  for (Method m : methods)
    if (name(m) == text) return m;
  return std::nullopt;
}

namespace detail {

// a_n = x a_{n-1} + s a_{n-2}, from the two seeds.
inline std::vector<BiPoly> fibonacci_like_sequence(unsigned n, BiPoly a0, BiPoly a1) {
  std::vector<BiPoly> out;
  out.reserve(n + 1);
  out.push_back(std::move(a0));
  if (n >= 1) out.push_back(std::move(a1));
  const BiPoly x = poly::x();
  const BiPoly s = poly::s();
  for (unsigned i = 2; i <= n; ++i) out.push_back(x * out[i - 1] + s * out[i - 2]);
  return out;
}

}  // namespace detail

/// F_0 .. F_n by the recurrence.
inline std::vector<BiPoly> fibonacci_sequence(unsigned n) {
  return detail::fibonacci_like_sequence(n, BiPoly{}, BiPoly(BigRat(1)));
}

/// L_0 .. L_n by the recurrence.
inline std::vector<BiPoly> lucas_sequence(unsigned n) {
  return detail::fibonacci_like_sequence(n, BiPoly(BigRat(2)), poly::x());
}

/// F_n(x, s): F_0 = 0, F_1 = 1, F_n = x F_{n-1} + s F_{n-2}.
inline BiPoly fibonacci(unsigned n, fib_method method = fib_method::recurrence) {
  if (method == fib_method::recurrence) return fibonacci_sequence(n).back();
  BiPoly out;
  if (n == 0) return out;
  for (unsigned k = 0; 2 * k <= n - 1; ++k) out.add_term({n - 1 - 2 * k, k}, BigRat(binomial(n - 1 - k, k)));
  return out;
}

/// L_n(x, s): L_0 = 2, L_1 = x, same recurrence as F_n.
inline BiPoly lucas(unsigned n, lucas_method method = lucas_method::recurrence) {
  switch (method) {
    case lucas_method::recurrence:
      return lucas_sequence(n).back();
    case lucas_method::closed: {
      // The n/(n-k) weight is 0/0 at n = 0; L_0 = 2 comes from the seeds.
      if (n == 0) return BiPoly(BigRat(2));
      BiPoly out;
      for (unsigned k = 0; 2 * k <= n; ++k) {
        BigRat c(binomial(n - k, k) * n, BigInt(n - k));
        c.canonicalize();
        if (!is_integer(c)) throw std::logic_error("lucas closed form produced a non-integer coefficient");
        out.add_term({n - 2 * k, k}, c);
      }
      return out;
    }
    case lucas_method::from_fib:
      if (n == 0) throw index_error("lucas from_fib needs n >= 1 (it references F_{n-1})");
      return fibonacci(n + 1) + poly::s() * fibonacci(n - 1);
  }
  throw std::invalid_argument("unknown lucas method");
}

/// c(n, k), the coefficient of s^(n-k) x^k in Z_n(x, s).
inline BigInt coefficient_c(unsigned n, unsigned k, c_form form = c_form::sum_binomials) {
  if (k < 1 || k > n)
    throw range_error("coefficient_c(" + std::to_string(n) + ", " + std::to_string(k) + "): need 1 <= k <= n");
  const std::int64_t nn = n;
  const std::int64_t kk = k;
  auto integral = [](BigRat r) {
    r.canonicalize();
    if (!is_integer(r)) throw std::logic_error("c(n,k) ratio form is not integral");
    return BigInt(r.get_num());
  };
  switch (form) {
    case c_form::ratio_binomial:
      return integral(BigRat(BigInt(nn) * binomial(nn + kk - 1, nn - kk), BigInt(kk)));
    case c_form::ratio_binomial_alt:
      return integral(BigRat(BigInt(nn) * binomial(nn + kk - 1, 2 * kk - 1), BigInt(kk)));
    case c_form::sum_binomials:
      return binomial(nn + kk, 2 * kk) + binomial(nn + kk - 1, 2 * kk);
    case c_form::product: {
      // 2 n^2 (n^2 - 1^2) ... (n^2 - (k-1)^2) / (2k)!
      BigInt num = 2;
      const BigInt n2 = BigInt(nn) * nn;
      for (std::int64_t j = 0; j < kk; ++j) num *= n2 - BigInt(j) * j;
      BigInt fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * kk));
      return integral(BigRat(num, fact));
    }
  }
  throw std::invalid_argument("unknown coefficient form");
}

/// Z_0 .. Z_n(x, s) from the third-order recurrence
/// Z_{n+3} = (x+3s) Z_{n+2} - s(x+3s) Z_{n+1} + s^3 Z_n. The seeds Z_0, Z_1,
/// Z_2 are the first listed terms; no other construction is used.
inline std::vector<BiPoly> z_sequence(unsigned n) {
  const BiPoly x = poly::x();
  const BiPoly s = poly::s();
  std::vector<BiPoly> z{BiPoly{}, x, BigRat(4) * s * x + x * x};
  z.resize(std::max<std::size_t>(n + 1, 3));
  const BiPoly a = x + BigRat(3) * s;
  const BiPoly b = s * a;
  const BiPoly c = pow(s, 3);
  for (unsigned i = 3; i <= n; ++i) z[i] = a * z[i - 1] - b * z[i - 2] + c * z[i - 3];
  z.resize(n + 1);
  return z;
}

/// Z_n(x, s), the bivariate spread polynomial.
inline BiPoly z_polynomial(unsigned n, z_method method = z_method::recurrence) {
  const BiPoly x = poly::x();
  const BiPoly s = poly::s();
  switch (method) {
    case z_method::recurrence:
      return z_sequence(n).back();
    case z_method::closed: {
      BiPoly out;
      for (unsigned k = 1; k <= n; ++k) out.add_term({k, n - k}, BigRat(coefficient_c(n, k)));
      return out;
    }
    case z_method::via_lucas:
      return even_substitute(lucas(2 * n), x) - BigRat(2) * pow(s, n);
    case z_method::via_fib: {
      // F_n(u, -s)^2 with u^2 -> x + 4s, times x.
      const BiPoly f = scale_variables(fibonacci(n), 1, -1);
      return x * even_substitute(f * f, x + BigRat(4) * s);
    }
    case z_method::parity: {
      const unsigned m = n / 2;
      if (n % 2 == 1) {
        const BiPoly l = lucas(2 * m + 1);
        return even_substitute(l * l, x);
      }
      const BiPoly f = fibonacci(2 * m);
      return (x + BigRat(4) * s) * even_substitute(f * f, x);
    }
  }
  throw std::invalid_argument("unknown z method");
}

/// Rows 1..N of c(n, k), row n holding c(n, 1) .. c(n, n).
class Triangle {
 public:
  explicit Triangle(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  /// 1-based row.
  const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n - 1); }
  const std::vector<std::vector<BigInt>>& rows() const noexcept { return rows_; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

inline Triangle triangle(unsigned n_rows, c_form form = c_form::sum_binomials) {
  if (n_rows < 1) throw range_error("triangle needs at least one row");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(n_rows);
  for (unsigned n = 1; n <= n_rows; ++n) {
    auto& row = rows.emplace_back();
    row.reserve(n);
    for (unsigned k = 1; k <= n; ++k) row.push_back(coefficient_c(n, k, form));
  }
  return Triangle(std::move(rows));
}

/// Reads c(n, 1..n) off a bivariate polynomial in the s^(n-k) x^k basis.
inline std::vector<BigInt> coefficient_row(const BiPoly& z, unsigned n) {
  std::vector<BigInt> row;
  row.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    const BigRat c = z.coefficient({k, n - k});
    if (!is_integer(c)) throw std::logic_error("non-integer coefficient in Z_n");
    row.emplace_back(c.get_num());
  }
  return row;
}

/// l_n(x) = L_n(x, -1).
inline UniPoly univariate_l(unsigned n) { return specialize_s(lucas(n), -1); }

/// Z_n(x), the univariate normalized spread polynomial.
inline UniPoly spread_z_univariate(unsigned n, spread_method method = spread_method::via_l) {
  const UniPoly x = poly::ux();
  const BigRat sign = sign_power(n + 1);  // (-1)^(n-1)
  switch (method) {
    case spread_method::via_l:
      // 2 - l_n(2 - x)
      return UniPoly(BigRat(2)) - compose_univariate(univariate_l(n), UniPoly(BigRat(2)) - x);
    case spread_method::via_l2n:
      return sign * (even_substitute(univariate_l(2 * n), x) - UniPoly(BigRat(2) * sign_power(n)));
    case spread_method::from_bivariate: {
      // (-1)^(n-1) Z_n(x, -1), taking the F_n(sqrt(x+4s), -s)^2 construction
      // at s = -1: x F_n(sqrt(x-4), 1)^2.
      const UniPoly f = specialize_s(fibonacci(n), 1);
      return sign * (x * even_substitute(f * f, x - UniPoly(BigRat(4))));
    }
  }
  throw std::invalid_argument("unknown spread method");
}

/// S_n(x) = Z_n(4x) / 4, the unnormalized spread polynomial.
inline UniPoly wildberger_spread(unsigned n) {
  UniPoly p = scale_variable(spread_z_univariate(n), 4) * BigRat(1, 4);
  if (!is_integral(p)) throw std::logic_error("S_n has a non-integer coefficient");
  return p;
}

/// T_n(x): T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
inline UniPoly chebyshev_t(unsigned n) {
  UniPoly prev(BigRat(1));
  if (n == 0) return prev;
  UniPoly cur = poly::ux();
  const UniPoly two_x = UniPoly::term(1U, 2);
  for (unsigned i = 2; i <= n; ++i) {
    UniPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace spreadpoly
