#pragma once

// Exact coefficient domain: GMP integers and rationals.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spreadpoly {

using BigInt = mpz_class;
/// Always in lowest terms with positive denominator once canonicalized;
/// every GMP arithmetic result already is.
using BigRat = mpq_class;

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline bool is_integer(const BigRat& v) { return v.get_den() == 1; }

/// Parses `[-+]digits` or `[-+]digits/digits` into a canonical rational.
inline BigRat parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw parse_error("malformed rational literal '" + std::string(text) + "'");
  BigInt d(std::string(den), 10);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  BigRat r(n, d);
  r.canonicalize();
  return r;
}

/// C(n, k) by the multiplicative formula; the running quotient is integral
/// at every step. Returns 0 for k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(n - k + i);
    r /= static_cast<unsigned long>(i);
  }
  return r;
}

/// (-1)^n as a rational.
inline BigRat sign_power(std::uint64_t n) { return (n % 2 == 0) ? BigRat(1) : BigRat(-1); }

inline BigRat rat_pow(const BigRat& base, std::uint64_t e) {
  BigRat r = 1;
  BigRat b = base;
  while (e != 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return r;
}

}  // namespace spreadpoly
