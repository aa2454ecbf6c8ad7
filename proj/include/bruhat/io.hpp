#pragma once

// Text and JSON forms of matrices, tables and margin pairs.
//
// Text: one row per line written with '0'/'1', no separators; a blank line
// (or end of input) terminates the matrix.
// JSON: {"m": rows, "n": cols, "rows": ["0110", ...]}.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bruhat/errors.hpp"
#include "bruhat/matrix.hpp"

namespace bruhat {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Reads the next matrix from `in`, skipping leading blank lines. Returns
/// nullopt at end of input.
inline std::optional<BinaryMatrix> read_matrix_text(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty()) {
      if (rows.empty()) continue;
      break;
    }
    rows.push_back(line);
  }
  if (rows.empty()) return std::nullopt;
  return BinaryMatrix::from_rows(rows);
}

inline BinaryMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  auto m = read_matrix_text(in);
  if (!m) throw ParseError("no matrix in input");
  return *m;
}

inline void write_matrix_text(std::ostream& out, const BinaryMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) out << a.row_string(i) << '\n';
}

inline std::string to_text(const BinaryMatrix& a) {
  std::ostringstream out;
  write_matrix_text(out, a);
  return out.str();
}

inline nlohmann::json to_json(const BinaryMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row_string(i));
  return {{"m", a.rows()}, {"n", a.cols()}, {"rows", rows}};
}

inline BinaryMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto m = j.at("m").get<std::size_t>();
    const auto n = j.at("n").get<std::size_t>();
    const auto rows = j.at("rows").get<std::vector<std::string>>();
    if (rows.size() != m) throw ParseError("matrix JSON: 'rows' has " + std::to_string(rows.size()) +
                                           " entries, 'm' says " + std::to_string(m));
    auto a = BinaryMatrix::from_rows(rows);
    if (a.cols() != n) throw ParseError("matrix JSON: row width disagrees with 'n'");
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

inline nlohmann::json to_json(const CumulativeTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < t.rows; ++k) {
    std::vector<std::uint32_t> row(t.values.begin() + static_cast<std::ptrdiff_t>(k * t.cols),
                                   t.values.begin() + static_cast<std::ptrdiff_t>((k + 1) * t.cols));
    rows.push_back(row);
  }
  return rows;
}

inline void write_table_text(std::ostream& out, const CumulativeTable& t) {
  for (std::size_t k = 0; k < t.rows; ++k) {
    for (std::size_t l = 0; l < t.cols; ++l) out << (l ? " " : "") << t.at(k, l);
    out << '\n';
  }
}

namespace detail {

inline std::vector<std::size_t> parse_sum_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad margin entry '" + item + "' in '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw ParseError("empty margin vector");
  return out;
}

}  // namespace detail

/// Parses "R/S" with comma-separated entries, e.g. "2,2,1/2,2,1". A bare
/// "R" stands for R/R.
inline MarginPair parse_margins(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto r = detail::parse_sum_list(text);
    return {r, r};
  }
  return {detail::parse_sum_list(text.substr(0, slash)), detail::parse_sum_list(text.substr(slash + 1))};
}

inline std::string format_margins(const MarginPair& mp) {
  std::string out;
  for (std::size_t p = 0; p < mp.row_sums.size(); ++p) out += (p ? "," : "") + std::to_string(mp.row_sums[p]);
  out += '/';
  for (std::size_t p = 0; p < mp.col_sums.size(); ++p) out += (p ? "," : "") + std::to_string(mp.col_sums[p]);
  return out;
}

}  // namespace bruhat
