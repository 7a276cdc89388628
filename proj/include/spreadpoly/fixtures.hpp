#pragma once

// Vendored rows of OEIS A156308 (the coefficient triangle c(n, k)).

#include <spreadpoly/a156308_data.hpp>
#include <spreadpoly/number.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace spreadpoly::fixtures {

/// Rows of a headerless CSV of decimal integers, one row per line.
inline std::vector<std::vector<BigInt>> parse_integer_csv(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto& row = rows.emplace_back();
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const BigRat v = parse_rational(cell);
      if (!is_integer(v)) throw parse_error("non-integer fixture entry '" + cell + "'");
      row.emplace_back(v.get_num());
    }
  }
  return rows;
}

/// First 10 rows, row n holding n entries.
inline std::vector<std::vector<BigInt>> a156308_rows() { return parse_integer_csv(a156308_csv); }

}  // namespace spreadpoly::fixtures
