#pragma once

// Sparse exact polynomials in one variable x, or in two commuting variables
// x and s, over the rationals.

#include <spreadpoly/number.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spreadpoly {

class odd_degree_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class zero_polynomial_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponent pair of x^x * s^s. The defaulted ordering compares x first, so a
/// descending map yields the canonical order: x-degree down, then s-degree down.
struct bi_monomial {
  unsigned x = 0;
  unsigned s = 0;
  friend auto operator<=>(const bi_monomial&, const bi_monomial&) = default;
};

constexpr bi_monomial monomial_product(bi_monomial a, bi_monomial b) noexcept { return {a.x + b.x, a.s + b.s}; }
constexpr unsigned monomial_product(unsigned a, unsigned b) noexcept { return a + b; }

template <class Monomial>
class sparse_polynomial {
 public:
  using monomial_type = Monomial;
  using term_map = std::map<Monomial, BigRat, std::greater<Monomial>>;

  sparse_polynomial() = default;

  explicit sparse_polynomial(const BigRat& constant) { add_term(Monomial{}, constant); }

  sparse_polynomial(std::initializer_list<std::pair<Monomial, BigRat>> terms) {
    for (const auto& [m, c] : terms) add_term(m, c);
  }

  static sparse_polynomial term(Monomial m, const BigRat& c = 1) {
    sparse_polynomial p;
    p.add_term(m, c);
    return p;
  }

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigRat coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  /// Adds c * m, dropping the entry if it cancels to zero.
  void add_term(Monomial m, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  sparse_polynomial& operator+=(const sparse_polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }

  sparse_polynomial& operator-=(const sparse_polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }

  sparse_polynomial& operator*=(const BigRat& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= k;
    }
    return *this;
  }

  sparse_polynomial& operator*=(const sparse_polynomial& rhs) { return *this = *this * rhs; }

  friend sparse_polynomial operator+(sparse_polynomial lhs, const sparse_polynomial& rhs) { return lhs += rhs; }
  friend sparse_polynomial operator-(sparse_polynomial lhs, const sparse_polynomial& rhs) { return lhs -= rhs; }
  friend sparse_polynomial operator*(sparse_polynomial lhs, const BigRat& k) { return lhs *= k; }
  friend sparse_polynomial operator*(const BigRat& k, sparse_polynomial rhs) { return rhs *= k; }

  friend sparse_polynomial operator-(sparse_polynomial p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  friend sparse_polynomial operator*(const sparse_polynomial& lhs, const sparse_polynomial& rhs) {
    sparse_polynomial out;
    for (const auto& [ma, ca] : lhs.terms_)
      for (const auto& [mb, cb] : rhs.terms_) out.terms_[monomial_product(ma, mb)] += ca * cb;
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  friend bool operator==(const sparse_polynomial&, const sparse_polynomial&) = default;

 private:
  term_map terms_;
};

using BiPoly = sparse_polynomial<bi_monomial>;
using UniPoly = sparse_polynomial<unsigned>;

namespace poly {

inline BiPoly x() { return BiPoly::term({1, 0}); }
inline BiPoly s() { return BiPoly::term({0, 1}); }
inline BiPoly constant(const BigRat& c) { return BiPoly(c); }
inline UniPoly ux() { return UniPoly::term(1U); }

}  // namespace poly

template <class M>
sparse_polynomial<M> pow(const sparse_polynomial<M>& p, unsigned k) {
  sparse_polynomial<M> result(BigRat(1));
  sparse_polynomial<M> base = p;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

template <class M>
bool is_integral(const sparse_polynomial<M>& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& kv) { return is_integer(kv.second); });
}

inline BigRat evaluate(const BiPoly& p, const BigRat& x0, const BigRat& s0) {
  BigRat sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c * rat_pow(x0, m.x) * rat_pow(s0, m.s);
  return sum;
}

inline BigRat evaluate(const UniPoly& p, const BigRat& x0) {
  // Horner over the sparse descending degrees.
  BigRat acc = 0;
  unsigned prev = 0;
  bool first = true;
  for (const auto& [deg, c] : p.terms()) {
    if (!first) acc *= rat_pow(x0, prev - deg);
    acc += c;
    prev = deg;
    first = false;
  }
  return first ? acc : acc * rat_pow(x0, prev);
}

/// Highest degree of a nonzero univariate polynomial.
inline unsigned degree(const UniPoly& p) {
  if (p.is_zero()) throw zero_polynomial_error("degree of the zero polynomial");
  return p.terms().begin()->first;
}

struct weight_info {
  long long max_weight = 0;
  bool homogeneous = true;
  friend bool operator==(const weight_info&, const weight_info&) = default;
};

/// Max of w_x*deg_x + w_s*deg_s over the terms, and whether every term has it.
inline weight_info weighted_degree(const BiPoly& p, unsigned w_x, unsigned w_s) {
  if (p.is_zero()) throw zero_polynomial_error("weighted degree of the zero polynomial");
  weight_info info;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const long long w = static_cast<long long>(w_x) * m.x + static_cast<long long>(w_s) * m.s;
    if (first) {
      info.max_weight = w;
      first = false;
    } else if (w != info.max_weight) {
      info.homogeneous = false;
      info.max_weight = std::max(info.max_weight, w);
    }
  }
  return info;
}

namespace detail {

// Powers q^0 .. q^max_k by repeated multiplication.
template <class M>
std::vector<sparse_polynomial<M>> power_table(const sparse_polynomial<M>& q, unsigned max_k) {
  std::vector<sparse_polynomial<M>> table;
  table.reserve(max_k + 1);
  table.emplace_back(BigRat(1));
  for (unsigned k = 1; k <= max_k; ++k) table.push_back(table.back() * q);
  return table;
}

}  // namespace detail

/// Replaces every x^(2k) of p by q^k; s exponents pass through unchanged.
/// Throws odd_degree_error when some term has odd x-degree.
inline BiPoly even_substitute(const BiPoly& p, const BiPoly& q) {
  unsigned max_half = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.x % 2 != 0)
      throw odd_degree_error("even_substitute: term with odd degree " + std::to_string(m.x) + " in the first variable");
    max_half = std::max(max_half, m.x / 2);
  }
  const auto powers = detail::power_table(q, max_half);
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    const bi_monomial shift{0, m.s};
    for (const auto& [qm, qc] : powers[m.x / 2].terms()) out.add_term(monomial_product(qm, shift), c * qc);
  }
  return out;
}

inline UniPoly even_substitute(const UniPoly& p, const UniPoly& q) {
  unsigned max_half = 0;
  for (const auto& [deg, c] : p.terms()) {
    if (deg % 2 != 0) throw odd_degree_error("even_substitute: term with odd degree " + std::to_string(deg));
    max_half = std::max(max_half, deg / 2);
  }
  const auto powers = detail::power_table(q, max_half);
  UniPoly out;
  for (const auto& [deg, c] : p.terms()) out += powers[deg / 2] * c;
  return out;
}

/// p(r(x)).
inline UniPoly compose_univariate(const UniPoly& p, const UniPoly& r) {
  UniPoly acc;
  unsigned prev = 0;
  bool first = true;
  for (const auto& [deg, c] : p.terms()) {
    if (!first) acc = acc * pow(r, prev - deg);
    acc += UniPoly(c);
    prev = deg;
    first = false;
  }
  if (!first) acc = acc * pow(r, prev);
  return acc;
}

/// p(a*x, b*s).
inline BiPoly scale_variables(const BiPoly& p, const BigRat& a, const BigRat& b) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, c * rat_pow(a, m.x) * rat_pow(b, m.s));
  return out;
}

/// p(a*x).
inline UniPoly scale_variable(const UniPoly& p, const BigRat& a) {
  UniPoly out;
  for (const auto& [deg, c] : p.terms()) out.add_term(deg, c * rat_pow(a, deg));
  return out;
}

/// p(x, s0) as a polynomial in x.
inline UniPoly specialize_s(const BiPoly& p, const BigRat& s0) {
  UniPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m.x, c * rat_pow(s0, m.s));
  return out;
}

/// Views a univariate polynomial as a bivariate one free of s.
inline BiPoly lift(const UniPoly& p) {
  BiPoly out;
  for (const auto& [deg, c] : p.terms()) out.add_term({deg, 0}, c);
  return out;
}

/// Product of two dense polynomials in an auxiliary variable z whose
/// coefficients are bivariate polynomials (index = power of z).
inline std::vector<BiPoly> convolve(std::span<const BiPoly> a, std::span<const BiPoly> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BiPoly> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

namespace detail {

inline void append_power(std::string& out, char var, unsigned e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (e > 1) out += '^' + std::to_string(e);
}

// One term without its sign; `mag` is |c|.
inline std::string render_term(const BigRat& mag, unsigned deg_x, unsigned deg_s) {
  std::string out;
  if (mag != 1 || (deg_x == 0 && deg_s == 0)) out = to_string(mag);
  append_power(out, 's', deg_s);
  append_power(out, 'x', deg_x);
  return out;
}

template <class Range, class Degrees>
std::string render(const Range& terms, std::size_t max_terms, Degrees degrees) {
  if (terms.empty()) return "0";
  std::string out;
  std::size_t shown = 0;
  for (const auto& [m, c] : terms) {
    if (shown == max_terms) {
      out += " + ... (" + std::to_string(terms.size() - shown) + " more terms)";
      break;
    }
    const bool negative = c < 0;
    if (shown == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const auto [dx, ds] = degrees(m);
    out += render_term(negative ? BigRat(-c) : c, dx, ds);
    ++shown;
  }
  return out;
}

}  // namespace detail

/// Canonical text form, e.g. `x^3 + 6*s*x^2 + 9*s^2*x`. With max_terms set,
/// the tail beyond that many terms is summarized.
inline std::string to_string(const BiPoly& p, std::size_t max_terms = static_cast<std::size_t>(-1)) {
  return detail::render(p.terms(), max_terms, [](bi_monomial m) { return std::pair{m.x, m.s}; });
}

inline std::string to_string(const UniPoly& p, std::size_t max_terms = static_cast<std::size_t>(-1)) {
  return detail::render(p.terms(), max_terms, [](unsigned d) { return std::pair{d, 0U}; });
}

}  // namespace spreadpoly
