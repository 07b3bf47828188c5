#pragma once

#include <string>
#include <string_view>

#include "dioid/interval.hpp"
#include "dioid/matrix.hpp"
#include "dioid/scalar.hpp"
#include "dioid/series.hpp"

namespace dioid {

// Literal grammar
//   scalar    eps | top | e | -?[0-9]+
//   series    term (+ term)*, where a term is a monomial T.gN (T a scalar,
//             N a possibly negative integer, a bare scalar meaning T.g0) or a
//             periodic part M.(T.gN)* / (M + M ...).(T.gN)*; eps, top and e
//             on their own denote ε(γ), ⊤(γ) and e(γ)
//   interval  [LO,HI] or a bare LO meaning [LO,LO]
//
// Parsers throw ParseError with a 1-based column within the literal.

MaxPlus parse_maxplus(std::string_view text);
Series parse_series(std::string_view text);
Interval<MaxPlus> parse_interval_maxplus(std::string_view text);
Interval<Series> parse_interval_series(std::string_view text);

std::string to_string(const Monomial& m);
std::string to_string(const Series& s);
std::string to_string(const Interval<MaxPlus>& x);
std::string to_string(const Interval<Series>& x);

template <class T>
T parse_element(std::string_view text);
template <>
inline MaxPlus parse_element<MaxPlus>(std::string_view text) {
  return parse_maxplus(text);
}
template <>
inline Series parse_element<Series>(std::string_view text) {
  return parse_series(text);
}
template <>
inline Interval<MaxPlus> parse_element<Interval<MaxPlus>>(std::string_view text) {
  return parse_interval_maxplus(text);
}
template <>
inline Interval<Series> parse_element<Interval<Series>>(std::string_view text) {
  return parse_interval_series(text);
}

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Splits a matrix file into literals. Whitespace ends a literal except
/// inside brackets or parentheses, or next to a '+'. '#' starts a comment.
std::vector<Token> tokenize_matrix(std::string_view text);

long long parse_dimension(const Token& t);

}  // namespace detail

/// Matrix file: "rows cols" followed by rows·cols literals, row by row.
template <class T>
Matrix<T> parse_matrix(std::string_view text) {
  auto tokens = detail::tokenize_matrix(text);
  if (tokens.size() < 2) throw ParseError("expected 'rows cols' header", tokens.empty() ? 1 : tokens[0].line, 1);
  long long rows = detail::parse_dimension(tokens[0]);
  long long cols = detail::parse_dimension(tokens[1]);
  const std::size_t need = static_cast<std::size_t>(rows * cols);
  if (tokens.size() - 2 < need) {
    const auto& last = tokens.back();
    throw ParseError("expected " + std::to_string(need) + " entries, found " + std::to_string(tokens.size() - 2),
                     last.line, last.column);
  }
  if (tokens.size() - 2 > need) {
    const auto& extra = tokens[2 + need];
    throw ParseError("unexpected extra entry '" + extra.text + "'", extra.line, extra.column);
  }
  Matrix<T> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t k = 0; k < need; ++k) {
    const auto& t = tokens[2 + k];
    try {
      m(k / cols, k % cols) = parse_element<T>(t.text);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), t.line, t.column + e.column() - 1);
    }
  }
  return m;
}

/// Inverse of parse_matrix: header line, then one row per line with entries
/// separated by two spaces.
template <class T>
std::string format_matrix(const Matrix<T>& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += "  ";
      out += to_string(m(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace dioid
