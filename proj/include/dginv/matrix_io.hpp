#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dginv/matrix.hpp"

namespace dginv {

// Text format: optional '#' comment lines, then "n" (or "n m" for a
// rectangular matrix), then n rows of whitespace-separated entries.

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;  // blank
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace detail

inline Matrix read_matrix(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw ParseError("empty matrix input");

  long long n = 0, m = 0;
  {
    std::istringstream header(line);
    if (!(header >> n)) throw ParseError("bad matrix header '" + line + "'");
    if (!(header >> m)) m = n;
    std::string extra;
    if (header >> extra) throw ParseError("bad matrix header '" + line + "'");
  }
  if (n < 1 || m < 1 || n > 100000 || m > 100000)
    throw ParseError("matrix dimensions out of range");

  Matrix a(static_cast<int>(n), static_cast<int>(m));
  for (int i = 0; i < n; ++i) {
    if (!detail::next_content_line(in, line))
      throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    std::istringstream row(line);
    std::string token;
    for (int j = 0; j < m; ++j) {
      if (!(row >> token))
        throw ParseError("row " + std::to_string(i + 1) + " has fewer than " +
                         std::to_string(m) + " entries");
      a(i, j) = parse_rational(token);
    }
    if (row >> token)
      throw ParseError("row " + std::to_string(i + 1) + " has more than " +
                       std::to_string(m) + " entries");
  }
  return a;
}

inline Matrix read_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

inline Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const Matrix& a,
                         const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << "\n";
  out << a.rows();
  if (a.rows() != a.cols()) out << " " << a.cols();
  out << "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out << " ";
      out << to_string(a(i, j));
    }
    out << "\n";
  }
}

inline std::string matrix_to_string(const Matrix& a,
                                    const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  write_matrix(out, a, comments);
  return out.str();
}

inline void write_matrix_file(const std::string& path, const Matrix& a,
                              const std::vector<std::string>& comments = {}) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_matrix(out, a, comments);
}

}  // namespace dginv
