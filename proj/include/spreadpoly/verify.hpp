#pragma once

// Named verification suites: index sweeps over the identity checks, the
// cross-construction comparisons, the Binet/surd evaluations and the
// generating-function expansions.

#include <spreadpoly/fixtures.hpp>
#include <spreadpoly/gf.hpp>
#include <spreadpoly/identities.hpp>
#include <spreadpoly/sequences.hpp>
#include <spreadpoly/surd.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spreadpoly {

struct suite_report {
  std::string name;
  std::string range;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<CheckResult> failures;

  bool ok() const noexcept { return failed == 0; }

  void record(CheckResult r) {
    if (r.passed) {
      ++passed;
    } else {
      ++failed;
      failures.push_back(std::move(r));
    }
  }
};

inline constexpr std::array<std::string_view, 12> suite_names{
    "cassini", "z_cassini", "lucas_binomial", "z_binomial",   "symmetry", "coefficients",
    "trig",    "chebyshev", "doubling",       "cross_method", "binet",    "gf"};

inline bool is_suite(std::string_view name) {
  return std::find(suite_names.begin(), suite_names.end(), name) != suite_names.end();
}

/// The trigonometric check is meaningful in doubles only up to this degree.
inline constexpr unsigned trig_max_degree = 20;

struct rational_point {
  BigRat x;
  BigRat s;
};

/// `count` points with numerators in [-20, 20] and denominators in [1, 20],
/// skipping those with x^2 + 4s = 0. Deterministic for a given seed.
inline std::vector<rational_point> binet_sample_points(std::size_t count, std::uint32_t seed = 20240917U) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  auto draw = [&] {
    BigRat r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  std::vector<rational_point> out;
  while (out.size() < count) {
    rational_point p{draw(), draw()};
    if (p.x * p.x + 4 * p.s != 0) out.push_back(std::move(p));
  }
  return out;
}

/// (q, s) with q in {0..3}, s in {-3..3}, excluding q^2 + 4s = 0.
inline std::vector<rational_point> binet_z_grid() {
  std::vector<rational_point> out;
  for (int q = 0; q <= 3; ++q)
    for (int s = -3; s <= 3; ++s)
      if (q * q + 4 * s != 0) out.push_back({q, s});
  return out;
}

namespace detail {

inline std::string span(unsigned lo, unsigned hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

inline CheckResult compare_values(std::string name, unsigned n, const BigRat& lhs, const BigRat& rhs, std::string note) {
  if (lhs == rhs) return pass(std::move(name), n);
  return fail(std::move(name), n, to_string(lhs), to_string(rhs), std::move(note));
}

inline std::string point_note(const BigRat& x, const BigRat& s) {
  return "at (" + to_string(x) + ", " + to_string(s) + ")";
}

inline void sweep(suite_report& r, unsigned lo, unsigned hi, const std::function<CheckResult(unsigned)>& check) {
  for (unsigned n = lo; n <= hi; ++n) r.record(check(n));
}

inline void run_binet(suite_report& r, unsigned max_n) {
  const std::vector<BiPoly> f = fibonacci_sequence(max_n);
  const std::vector<BiPoly> l = lucas_sequence(max_n);
  for (const auto& p : binet_sample_points(25)) {
    const std::string note = point_note(p.x, p.s);
    for (unsigned n = 0; n <= max_n; ++n) {
      r.record(compare_values("binet_fibonacci", n, binet_fibonacci(n, p.x, p.s), evaluate(f[n], p.x, p.s), note));
      r.record(compare_values("binet_lucas", n, binet_lucas(n, p.x, p.s), evaluate(l[n], p.x, p.s), note));
    }
  }
  const std::vector<BiPoly> z = z_sequence(max_n);
  for (const auto& p : binet_z_grid()) {
    const BigRat x0 = p.x * p.x;
    const std::string note = point_note(x0, p.s);
    for (unsigned n = 0; n <= max_n; ++n)
      r.record(compare_values("binet_z", n, binet_z(n, p.x, p.s), evaluate(z[n], x0, p.s), note));
    const root_relation_report rel = check_root_relations(p.x, p.s);
    r.record(rel.passed() ? pass("root_relations", 0)
                          : fail("root_relations", 0, "relations violated", "all hold", "q=" + to_string(p.x) + " " + note));
  }
  // Z_n(1, 2) = (2^n - 1)^2, evaluated on the closed form.
  for (unsigned n = 0; n <= max_n; ++n) {
    BigInt m = 1;
    m <<= n;
    m -= 1;
    r.record(compare_values("z_at_1_2", n, evaluate(z_polynomial(n, z_method::closed), 1, 2), BigRat(m * m),
                            "Z_n(1,2) vs (2^n-1)^2"));
  }
}

inline void run_gf(suite_report& r, unsigned max_n) {
  const std::vector<BiPoly> f = fibonacci_sequence(max_n);
  const std::vector<BiPoly> l = lucas_sequence(max_n);
  const std::vector<BiPoly> z = z_sequence(max_n + 1);
  for (gf_kind kind : {gf_kind::fibonacci, gf_kind::lucas, gf_kind::z_shifted}) {
    const RationalGF gf = gf_of(kind);
    const std::vector<BiPoly> series = expand(gf, max_n);
    const std::string label = "gf_" + std::string(name(kind));
    for (unsigned n = 0; n <= max_n; ++n) {
      const BiPoly& expected = kind == gf_kind::fibonacci ? f[n] : kind == gf_kind::lucas ? l[n] : z[n + 1];
      r.record(compare(label, n, series[n], expected));
    }
    std::vector<BiPoly> numerator = gf.numerator;
    numerator.resize(series.size());
    r.record(multiply_back(gf, series) == numerator
                 ? pass(label + "_round_trip", max_n)
                 : fail(label + "_round_trip", max_n, "D(z) * series", "N(z)", "convolution round trip"));
  }
}

inline void run_coefficients(suite_report& r, unsigned max_n) {
  sweep(r, 1, max_n, check_coefficient_forms);
  const Triangle tri = triangle(max_n);
  const std::vector<BiPoly> z = z_sequence(max_n);
  auto render_row = [](const std::vector<BigInt>& row) {
    std::string out;
    for (const auto& v : row) out += (out.empty() ? "" : ",") + to_string(v);
    return out;
  };
  for (unsigned n = 1; n <= max_n; ++n) {
    const std::vector<BigInt> extracted = coefficient_row(z[n], n);
    r.record(extracted == tri.row(n)
                 ? pass("triangle_vs_z", n)
                 : fail("triangle_vs_z", n, render_row(tri.row(n)), render_row(extracted), "triangle row vs Z_n coefficients"));
  }
  const auto fixture = fixtures::a156308_rows();
  const unsigned rows = std::min<unsigned>(max_n, static_cast<unsigned>(fixture.size()));
  for (unsigned n = 1; n <= rows; ++n)
    r.record(fixture[n - 1] == tri.row(n)
                 ? pass("triangle_vs_a156308", n)
                 : fail("triangle_vs_a156308", n, render_row(tri.row(n)), render_row(fixture[n - 1]), "A156308 fixture"));
}

}  // namespace detail

/// Runs one named suite over indices up to max_n.
inline suite_report run_suite(std::string_view suite, unsigned max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  suite_report r;
  r.name = std::string(suite);
  using detail::span;
  using detail::sweep;
  if (suite == "cassini") {
    r.range = span(1, max_n);
    sweep(r, 1, max_n, check_cassini);
  } else if (suite == "z_cassini") {
    r.range = span(1, max_n);
    sweep(r, 1, max_n, check_z_cassini);
  } else if (suite == "lucas_binomial") {
    r.range = span(0, max_n) + " (both parities)";
    sweep(r, 0, max_n, [](unsigned n) { return check_lucas_binomial(n, parity::even); });
    sweep(r, 0, max_n, [](unsigned n) { return check_lucas_binomial(n, parity::odd); });
  } else if (suite == "z_binomial") {
    r.range = span(1, max_n);
    sweep(r, 1, max_n, check_z_binomial);
  } else if (suite == "symmetry") {
    r.range = span(1, max_n);
    sweep(r, 1, max_n, check_symmetry);
  } else if (suite == "coefficients") {
    r.range = span(1, max_n);
    detail::run_coefficients(r, max_n);
  } else if (suite == "trig") {
    const unsigned hi = std::min(max_n, trig_max_degree);
    r.range = span(1, hi);
    sweep(r, 1, hi, [](unsigned n) { return check_trig(n); });
  } else if (suite == "chebyshev") {
    r.range = span(1, max_n);
    sweep(r, 1, max_n, check_chebyshev_bala);
  } else if (suite == "doubling") {
    r.range = span(1, max_n);
    sweep(r, 1, max_n, check_l_doubling);
  } else if (suite == "cross_method") {
    r.range = span(0, max_n);
    sweep(r, 0, max_n, check_z_methods);
    sweep(r, 0, max_n, check_fibonacci_methods);
    sweep(r, 0, max_n, check_lucas_methods);
    sweep(r, 0, max_n, check_spread_methods);
  } else if (suite == "binet") {
    r.range = span(0, max_n);
    detail::run_binet(r, max_n);
  } else if (suite == "gf") {
    r.range = span(0, max_n);
    detail::run_gf(r, max_n);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  return r;
}

/// Runs `selector` ("all" or one suite name). Suites run concurrently;
/// reports come back in suite_names order.
inline std::vector<suite_report> run_suites(std::string_view selector, unsigned max_n) {
  std::vector<std::string_view> selected;
  if (selector == "all") {
    selected.assign(suite_names.begin(), suite_names.end());
  } else if (is_suite(selector)) {
    selected.push_back(selector);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(selector) + "'");
  }
  std::vector<std::future<suite_report>> pending;
  pending.reserve(selected.size());
  for (std::string_view s : selected) pending.push_back(std::async(std::launch::async, run_suite, s, max_n));
  std::vector<suite_report> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

inline std::string format_report(const std::vector<suite_report>& reports) {
  std::ostringstream os;
  bool all_ok = true;
  for (const auto& r : reports) {
    all_ok = all_ok && r.ok();
    os << std::left << std::setw(16) << r.name << (r.ok() ? "PASS" : "FAIL") << "  " << r.passed << "/"
       << (r.passed + r.failed) << " checks  n=" << r.range << "\n";
  }
  for (const auto& r : reports) {
    for (const auto& f : r.failures) {
      os << "  [" << r.name << "] " << f.name << " " << f.range;
      if (f.witness && !f.witness->note.empty()) os << " (" << f.witness->note << ")";
      os << "\n";
      if (f.witness) os << "    lhs: " << f.witness->lhs << "\n    rhs: " << f.witness->rhs << "\n";
    }
  }
  os << (all_ok ? "all suites PASS" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace spreadpoly
