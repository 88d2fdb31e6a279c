#pragma once

// Text format for states. The header line is either
//     dims d_A d_B      (a density matrix, d_A*d_B rows of entries)
// or  pure d_A d_B      (an amplitude list of length d_A*d_B)
// Complex literals: 1.5, -2e-3, 0.5+0.5i, 1e-2-3i, 0.25i. Whitespace
// separates entries, '#' starts a comment. Parsed states are validated.

#include <cctype>
#include <cstdlib>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncqd/states.hpp"

namespace ncqd {

inline constexpr int kMaxTotalDim = 16;

struct ParsedState {
  std::optional<PureState> pure;  // set for 'pure' inputs
  DensityMatrix rho;              // always set; the projector for pure inputs

  bool is_pure() const { return pure.has_value(); }
};

inline cplx parse_complex(const std::string& token, int line) {
  const char* s = token.c_str();
  char* end = nullptr;
  const double first = std::strtod(s, &end);
  if (end == s) throw parse_error("invalid complex literal '" + token + "'", line);
  if (*end == 'i' && *(end + 1) == '\0') {
    if (!std::isfinite(first)) throw parse_error("non-finite value '" + token + "'", line);
    return {0.0, first};
  }
  if (*end == '\0') {
    if (!std::isfinite(first)) throw parse_error("non-finite value '" + token + "'", line);
    return {first, 0.0};
  }
  if (*end != '+' && *end != '-')
    throw parse_error("invalid complex literal '" + token + "'", line);
  char* end2 = nullptr;
  const double second = std::strtod(end, &end2);
  if (end2 == end || *end2 != 'i' || *(end2 + 1) != '\0')
    throw parse_error("invalid complex literal '" + token + "' (expected re+imi)", line);
  if (!std::isfinite(first) || !std::isfinite(second))
    throw parse_error("non-finite value '" + token + "'", line);
  return {first, second};
}

namespace detail {

struct Token {
  std::string text;
  int line;
};

inline std::vector<Token> tokenize_state_text(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos > start) tokens.push_back({line.substr(start, pos - start), line_no});
    }
  }
  return tokens;
}

inline int parse_dim(const Token& tok) {
  char* end = nullptr;
  const long v = std::strtol(tok.text.c_str(), &end, 10);
  if (end == tok.text.c_str() || *end != '\0' || v < 1)
    throw parse_error("invalid dimension '" + tok.text + "'", tok.line);
  return static_cast<int>(v);
}

}  // namespace detail

inline ParsedState parse_state_text(std::istream& in) {
  const std::vector<detail::Token> tokens = detail::tokenize_state_text(in);
  if (tokens.size() < 3)
    throw parse_error("missing header; expected 'dims d_A d_B' or 'pure d_A d_B'",
                      tokens.empty() ? 1 : tokens.back().line);
  const std::string& kind = tokens[0].text;
  if (kind != "dims" && kind != "pure")
    throw parse_error("unknown header '" + kind + "'; expected 'dims' or 'pure'", tokens[0].line);
  const int d_a = detail::parse_dim(tokens[1]);
  const int d_b = detail::parse_dim(tokens[2]);
  if (d_a * d_b > kMaxTotalDim)
    throw parse_error("total dimension " + std::to_string(d_a * d_b) + " exceeds the supported " +
                          std::to_string(kMaxTotalDim),
                      tokens[1].line);
  const int n = d_a * d_b;
  const std::size_t expected = kind == "pure" ? static_cast<std::size_t>(n)
                                              : static_cast<std::size_t>(n) * n;
  const std::size_t got = tokens.size() - 3;
  if (got != expected)
    throw parse_error("expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(got),
                      tokens.back().line);

  std::vector<cplx> entries;
  entries.reserve(expected);
  for (std::size_t k = 3; k < tokens.size(); ++k)
    entries.push_back(parse_complex(tokens[k].text, tokens[k].line));

  if (kind == "pure") {
    PureState psi(std::move(entries));
    DensityMatrix rho = projector(psi, d_a, d_b);
    return {std::move(psi), std::move(rho)};
  }
  return {std::nullopt, validate(ComplexMatrix(n, n, std::move(entries)), d_a, d_b)};
}

inline std::string format_complex(const cplx& z, int significant = 9) {
  std::string out = detail::fmt_g(z.real(), significant);
  if (z.imag() != 0.0) {
    const std::string im = detail::fmt_g(z.imag(), significant);
    out += (im.front() == '-' ? "" : "+") + im + "i";
  }
  return out;
}

}  // namespace ncqd
