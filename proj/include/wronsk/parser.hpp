#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wronsk/polynomial.hpp"

namespace wronsk {

struct ExprToken {
    enum class Kind { integer, slash, variable, plus, minus, star, caret, lparen, rparen };
    Kind kind;
    std::string lexeme;
    std::size_t position;  // byte offset into the source
};

struct ParseError {
    std::size_t position;  // byte offset, may equal the source length (end of input)
    std::string expected;
    std::string found;
    std::string message() const;
};

using LexResult = std::variant<std::vector<ExprToken>, ParseError>;
using ParseResult = std::variant<Polynomial, ParseError>;

// Tokenizes a polynomial expression. Whitespace separates tokens and is
// otherwise ignored; any unexpected character yields a ParseError.
LexResult lex_expression(std::string_view source);

// Parses an expression into canonical polynomial form. Grammar, loosest to
// tightest binding:
//
//   sum      := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nonneg-integer)?
//   base     := rational | variable | '(' sum ')'
//   rational := integer ('/' positive-integer)?
//
// Multiplication is always explicit ('2*x', never '2x'). Variables are
// x1..xd for any d, with x, y, z accepted as aliases when d <= 3.
ParseResult parse_polynomial(std::string_view source, int dimension);

// Convenience wrapper that throws std::invalid_argument with the error
// message; for fixtures and internal callers with trusted input.
Polynomial parse_polynomial_or_throw(std::string_view source, int dimension);

// Canonical rendering; parse_polynomial(render(p), p.dimension()) == p.
std::string render(const Polynomial& p);

}  // namespace wronsk
