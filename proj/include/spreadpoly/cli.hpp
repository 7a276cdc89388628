#pragma once

// The `spreadpoly` command line:
//   spreadpoly <gen|triangle|verify|eval|series> [args] [--method M]
//              [--format text|json|csv] [--max-n N]
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <spreadpoly/gf.hpp>
#include <spreadpoly/json.hpp>
#include <spreadpoly/sequences.hpp>
#include <spreadpoly/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace spreadpoly::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using any_poly = std::variant<BiPoly, UniPoly>;

inline bool is_bivariate(std::string_view family) { return family == "F" || family == "L" || family == "Z"; }

inline constexpr std::array<std::string_view, 7> families{"F", "L", "Z", "l", "Zx", "S", "T"};

namespace detail {

template <class Method, std::size_t N>
Method pick(const std::string& family, const std::optional<std::string>& method, const std::array<Method, N>& all) {
  if (!method) return all.front();
  if (auto m = parse_method(*method, all)) return *m;
  std::string valid;
  for (Method m : all) valid += (valid.empty() ? "" : ", ") + std::string(name(m));
  throw usage_error("unknown method '" + *method + "' for family " + family + " (valid: " + valid + ")");
}

inline unsigned parse_index(const std::string& text, const char* what) {
  if (text.empty() || text.size() > 9 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw usage_error(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  return static_cast<unsigned>(std::stoul(text));
}

inline BigRat parse_literal(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const parse_error& e) {
    throw usage_error(e.what());
  }
}

inline void print_poly(std::ostream& out, const std::string& family, unsigned n, const any_poly& p, const std::string& format) {
  if (format == "json") {
    out << std::visit([&](const auto& q) { return to_json(family, n, q); }, p).dump() << "\n";
  } else {
    out << std::visit([](const auto& q) { return to_string(q); }, p) << "\n";
  }
}

inline void require_format(const std::string& format, bool csv_allowed) {
  if (format == "text" || format == "json") return;
  if (format == "csv" && csv_allowed) return;
  if (format == "csv") throw usage_error("--format csv is only valid for triangle output");
  throw usage_error("unknown format '" + format + "' (expected text, json or csv)");
}

}  // namespace detail

/// Builds family member n. Bivariate families yield BiPoly, the others UniPoly.
inline any_poly build(const std::string& family, unsigned n, const std::optional<std::string>& method) {
  if (family == "F") return fibonacci(n, detail::pick(family, method, all_fib_methods));
  if (family == "L") {
    const lucas_method m = detail::pick(family, method, all_lucas_methods);
    if (m == lucas_method::from_fib && n == 0) throw usage_error("method from_fib needs n >= 1");
    return lucas(n, m);
  }
  if (family == "Z") return z_polynomial(n, detail::pick(family, method, all_z_methods));
  if (family == "Zx") return spread_z_univariate(n, detail::pick(family, method, all_spread_methods));
  if (family == "l" || family == "S" || family == "T") {
    if (method) throw usage_error("family " + family + " has a single construction; --method is not accepted");
    if (family == "l") return univariate_l(n);
    if (family == "S") return wildberger_spread(n);
    return chebyshev_t(n);
  }
  throw usage_error("unknown family '" + family + "' (expected F, L, Z, l, Zx, S or T)");
}

inline void write_triangle(std::ostream& out, const Triangle& tri, const std::string& format) {
  if (format == "csv") {
    for (const auto& row : tri.rows()) {
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << to_string(row[k]);
      out << "\n";
    }
  } else if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& row : tri.rows()) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back(to_string(v));
      rows.push_back(std::move(r));
    }
    out << ordered_json{{"N", tri.size()}, {"rows", std::move(rows)}}.dump() << "\n";
  } else {
    std::vector<std::size_t> width(tri.size(), 0);
    for (const auto& row : tri.rows())
      for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], to_string(row[k]).size());
    for (const auto& row : tri.rows()) {
      std::string line;
      for (std::size_t k = 0; k < row.size(); ++k) {
        const std::string v = to_string(row[k]);
        if (k) line += ' ';
        line += std::string(width[k] - v.size(), ' ') + v;
      }
      out << line << "\n";
    }
  }
}

/// Entry point; argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivariate spread polynomials Z_n(x,s), Fibonacci/Lucas polynomials and identity checks"};
  app.name("spreadpoly");
  app.require_subcommand(1, 1);

  std::string family;
  std::string index;
  std::optional<std::string> method;
  std::string format = "text";
  std::string suite;
  std::string max_n_text = "50";
  std::string x_literal;
  std::optional<std::string> s_literal;
  std::string kind;

  auto* gen = app.add_subcommand("gen", "Print one polynomial of a family");
  gen->add_option("family", family, "F, L, Z (bivariate) or l, Zx, S, T (univariate)")->required();
  gen->add_option("n", index, "Index n >= 0")->required();
  gen->add_option("--method", method, "Construction (family dependent; default is the first listed)");
  gen->add_option("--format", format, "text or json");

  auto* tri = app.add_subcommand("triangle", "Print rows 1..N of the coefficient triangle c(n,k)");
  tri->add_option("N", index, "Number of rows >= 1")->required();
  tri->add_option("--format", format, "text, json or csv");

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("suite", suite, "all or one suite name")->required();
  ver->add_option("--max-n", max_n_text, "Largest index to check (>= 1)");

  auto* ev = app.add_subcommand("eval", "Evaluate a polynomial exactly at a rational point");
  ev->add_option("family", family, "Family name")->required();
  ev->add_option("n", index, "Index n >= 0")->required();
  ev->add_option("x0", x_literal, "Rational literal, p/q or integer")->required();
  ev->add_option("s0", s_literal, "Rational literal; required for F, L, Z");
  ev->add_option("--method", method, "Construction");

  auto* ser = app.add_subcommand("series", "Expand a generating function to order N");
  ser->add_option("kind", kind, "fibonacci, lucas or z_shifted")->required();
  ser->add_option("N", index, "Highest power of z")->required();
  ser->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    if (gen->parsed()) {
      detail::require_format(format, false);
      const unsigned n = detail::parse_index(index, "n");
      detail::print_poly(out, family, n, build(family, n, method), format);
    } else if (tri->parsed()) {
      detail::require_format(format, true);
      const unsigned n = detail::parse_index(index, "N");
      if (n < 1) throw usage_error("N must be >= 1");
      write_triangle(out, triangle(n), format);
    } else if (ver->parsed()) {
      const unsigned max_n = detail::parse_index(max_n_text, "--max-n");
      if (max_n < 1) throw usage_error("--max-n must be >= 1");
      if (suite != "all" && !is_suite(suite)) {
        std::string valid = "all";
        for (auto s : suite_names) valid += ", " + std::string(s);
        throw usage_error("unknown suite '" + suite + "' (valid: " + valid + ")");
      }
      const auto reports = run_suites(suite, max_n);
      out << format_report(reports);
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const suite_report& r) { return r.ok(); });
      return ok ? exit_ok : exit_failed;
    } else if (ev->parsed()) {
      const unsigned n = detail::parse_index(index, "n");
      const BigRat x0 = detail::parse_literal(x_literal);
      if (is_bivariate(family) && !s_literal) throw usage_error("family " + family + " is bivariate; s0 is required");
      if (!is_bivariate(family) && s_literal) throw usage_error("family " + family + " is univariate; s0 is not accepted");
      const std::optional<BigRat> s0 = s_literal ? std::optional(detail::parse_literal(*s_literal)) : std::nullopt;
      const any_poly p = build(family, n, method);
      const BigRat v = std::holds_alternative<BiPoly>(p) ? evaluate(std::get<BiPoly>(p), x0, *s0)
                                                         : evaluate(std::get<UniPoly>(p), x0);
      out << to_string(v) << "\n";
    } else if (ser->parsed()) {
      detail::require_format(format, false);
      const auto k = parse_gf_kind(kind);
      if (!k) throw usage_error("unknown series kind '" + kind + "' (expected fibonacci, lucas or z_shifted)");
      const unsigned n_max = detail::parse_index(index, "N");
      const std::vector<BiPoly> series = expand(gf_of(*k), n_max);
      if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (unsigned i = 0; i <= n_max; ++i) arr.push_back(to_json(kind, i, series[i]));
        out << arr.dump() << "\n";
      } else {
        for (const auto& p : series) out << to_string(p) << "\n";
      }
    }
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace spreadpoly::cli
