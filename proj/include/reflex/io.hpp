#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "reflex/canonical.hpp"
#include "reflex/errors.hpp"
#include "reflex/numeric.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

/// Contents of a polytope file: a "d n" header line, then n lines of d
/// integers separated by single spaces.
struct PolyFile {
  std::size_t dim = 0;
  std::vector<IntVector> vertices;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

inline Integer parse_integer(const Token& t, std::size_t line) {
  std::string_view s = t.text;
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) throw ParseError(line, t.column, "expected an integer, got '" + std::string(s) + "'");
  for (std::size_t i = k; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(line, t.column + i, "expected an integer, got '" + std::string(s) + "'");
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

inline std::size_t parse_count(const Token& t, std::size_t line, const char* what) {
  Integer x = parse_integer(t, line);
  if (x <= 0 || x > 1000000) throw ParseError(line, t.column, std::string(what) + " must be a positive integer");
  return static_cast<std::size_t>(x);
}

}  // namespace detail

/// Parses the text of a polytope file. Blank lines after the last vertex
/// are accepted; anything else out of place is a ParseError.
inline PolyFile parse_poly(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty() || detail::split_tokens(lines[0]).empty()) throw ParseError(1, 1, "missing header 'd n'");
  const auto header = detail::split_tokens(lines[0]);
  if (header.size() != 2)
    throw ParseError(1, header.size() > 2 ? header[2].column : header.back().column + header.back().text.size(),
                     "header must be 'd n'");
  PolyFile f;
  f.dim = detail::parse_count(header[0], 1, "dimension");
  const std::size_t n = detail::parse_count(header[1], 1, "vertex count");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lineno = i + 2;
    if (lineno > lines.size()) throw ParseError(lineno, 1, "expected " + std::to_string(n) + " vertex lines");
    const auto toks = detail::split_tokens(lines[lineno - 1]);
    if (toks.size() != f.dim) {
      const std::size_t col = toks.size() > f.dim ? toks[f.dim].column : lines[lineno - 1].size() + 1;
      throw ParseError(lineno, col, "expected " + std::to_string(f.dim) + " coordinates, got " + std::to_string(toks.size()));
    }
    IntVector v;
    for (const auto& t : toks) v.push_back(detail::parse_integer(t, lineno));
    f.vertices.push_back(std::move(v));
  }
  for (std::size_t k = n + 1; k < lines.size(); ++k)
    if (!detail::split_tokens(lines[k]).empty()) throw ParseError(k + 1, 1, "unexpected content after the last vertex");
  return f;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

/// Reads and validates a polytope file.
inline LatticePolytope read_polytope(const std::string& path) {
  const std::string text = read_text(path);
  PolyFile f;
  try {
    f = parse_poly(text);
  } catch (const ParseError& e) {
    throw ParseError(path, e);
  }
  return LatticePolytope(std::move(f.vertices));
}

inline std::string format_poly(std::size_t dim, const std::vector<IntVector>& vertices) {
  std::string s = std::to_string(dim) + " " + std::to_string(vertices.size()) + "\n";
  for (const auto& v : vertices) s += to_string(v) + "\n";
  return s;
}

inline std::string format_poly(const LatticePolytope& p) { return format_poly(p.dim(), p.vertices()); }

/// Rational vertices, with p/q tokens where a coordinate is not integral.
inline std::string format_poly(std::size_t dim, const std::vector<RatVector>& vertices) {
  std::string s = std::to_string(dim) + " " + std::to_string(vertices.size()) + "\n";
  for (const auto& v : vertices) s += to_string(v) + "\n";
  return s;
}

/// The normal form as a polytope file whose vertices are its columns.
inline std::string format_normal_form(const NormalForm& nf) { return format_poly(nf.matrix.rows(), nf.vertices()); }

}  // namespace reflex
