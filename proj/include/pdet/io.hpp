#ifndef PDET_IO_HPP
#define PDET_IO_HPP

#include <pdet/exact.hpp>
#include <pdet/scalar.hpp>

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace pdet {

/*
 * Matrix text format: one row per line, entries separated by whitespace,
 * each an integer or "p/q". Text after '#' is a comment and blank lines are
 * skipped. An input with no rows is the 0x0 matrix.
 */
inline ExactMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<Scalar>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Scalar> row;
    for (std::string token; fields >> token;) {
      try {
        row.push_back(parse_scalar(token));
      } catch (const ParseError& e) {
        throw ParseError("matrix line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " entries, found " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline std::string format_matrix(const ExactMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace pdet

#endif  // PDET_IO_HPP
