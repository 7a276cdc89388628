#pragma once

// Rational generating functions N(z)/D(z) with bivariate coefficients and
// their power-series expansion.

#include <spreadpoly/poly.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace spreadpoly {

class malformed_gf : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient lists indexed by the power of z. The denominator's constant
/// term must be exactly 1, which makes the expansion division-free.
struct RationalGF {
  std::vector<BiPoly> numerator;
  std::vector<BiPoly> denominator;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

enum class gf_kind { fibonacci, lucas, z_shifted };

constexpr std::string_view name(gf_kind k) {
  switch (k) {
    case gf_kind::fibonacci: return "fibonacci";
    case gf_kind::lucas: return "lucas";
    case gf_kind::z_shifted: return "z_shifted";
  }
  return "?";
}

inline std::optional<gf_kind> parse_gf_kind(std::string_view text) {
  for (gf_kind k : {gf_kind::fibonacci, gf_kind::lucas, gf_kind::z_shifted})
    if (name(k) == text) return k;
  return std::nullopt;
}

/// Sum F_n z^n, sum L_n z^n, or sum Z_{n+1} z^n as a rational function.
inline RationalGF gf_of(gf_kind kind) {
  using poly::s;
  using poly::x;
  const BiPoly one(BigRat(1));
  switch (kind) {
    case gf_kind::fibonacci:
      return {{BiPoly{}, one}, {one, -x(), -s()}};
    case gf_kind::lucas:
      return {{BiPoly(BigRat(2)), -x()}, {one, -x(), -s()}};
    case gf_kind::z_shifted: {
      const BiPoly x3s = x() + BigRat(3) * s();
      return {{x(), s() * x()}, {one, -x3s, s() * x3s, -pow(s(), 3)}};
    }
  }
  throw std::invalid_argument("unknown generating function");
}

/// Series coefficients a_0 .. a_n_max of N(z)/D(z), by
/// a_n = N_n - sum_{j>=1} D_j a_{n-j}.
inline std::vector<BiPoly> expand(const RationalGF& gf, std::size_t n_max) {
  if (gf.denominator.empty() || gf.denominator.front() != BiPoly(BigRat(1)))
    throw malformed_gf("generating function denominator must have constant term 1");
  std::vector<BiPoly> a;
  a.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    BiPoly an = n < gf.numerator.size() ? gf.numerator[n] : BiPoly{};
    for (std::size_t j = 1; j < gf.denominator.size() && j <= n; ++j) an -= gf.denominator[j] * a[n - j];
    a.push_back(std::move(an));
  }
  return a;
}

/// D(z) * series, truncated to the series' length. Equals the numerator
/// (zero-padded) when the series is a correct expansion.
inline std::vector<BiPoly> multiply_back(const RationalGF& gf, const std::vector<BiPoly>& series) {
  std::vector<BiPoly> product = convolve(gf.denominator, series);
  product.resize(series.size());
  return product;
}

}  // namespace spreadpoly
