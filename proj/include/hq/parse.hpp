#pragma once

// Text syntax for scalars, matrices and words.
//
//   scalar := sum of products of factors; factor := integer | integer/integer |
//             z | zeta<n> | (scalar), each optionally raised to ^k (k may be negative)
//   z is zeta_N for the session order N; zeta<n> is zeta_n and needs n | N.
//   matrix := [[s, s, ...], [s, ...], ...]

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hq/matrix.hpp"

namespace hq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t column) : std::runtime_error(msg), column_(column) {}
  size_t column() const { return column_; }  // 0-based offset into the parsed text

 private:
  size_t column_;
};

Scalar parse_scalar(const std::string& text, const CycContext& ctx);
Matrix parse_matrix(const std::string& text, const CycContext& ctx);

struct SignedTerm {
  int sign = 1;
  std::string text;
  size_t offset = 0;
};
// Splits at top-level '+' and '-' (not inside parentheses or brackets, and not
// an exponent sign after '^').
std::vector<SignedTerm> split_terms(const std::string& text);
// Splits at top-level '*'.
std::vector<SignedTerm> split_factors(const std::string& text);

// Reads a word over the given names: "u.v.v", "uvvu", "u^2v" or a single name.
// Names may be separated by '.'; otherwise they are segmented greedily with
// backtracking. Returns nullopt when the text is not a word.
std::optional<std::vector<size_t>> parse_word(const std::string& text, const std::vector<std::string>& names);

// Parses "coeff*word + ..." into (word, coefficient) pairs. Factors that are
// words over names form the word; the rest multiply the coefficient.
std::vector<std::pair<std::vector<size_t>, Scalar>> parse_linear_combination(
    const std::string& text, const std::vector<std::string>& names, const CycContext& ctx);

std::string trim(const std::string& s);

}  // namespace hq
