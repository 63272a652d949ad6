#pragma once

#include <string>

#include "supmech/ncpoly.hpp"

namespace supmech {

// Parses an algebra expression over the generators and formal parameters of a
// presentation. Grammar summary (full description in docs/expression-dsl.md):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' unary) | ('/' unary))*      (explicit operators only)
//   unary   := ('-' | '+') unary | postfix
//   postfix := primary ('^' ['-'] integer | '*')*       (postfix '*' = involution)
//   primary := integer | identifier | '(' expr ')'
//
// A '*' is treated as multiplication when the next token can start an operand
// (number, identifier, '('), and as the involution otherwise. Division and
// negative powers require the divisor/base to reduce to a single invertible
// scalar monomial. 'I' is the algebra unit and 'i' the imaginary unit; other
// identifiers resolve to generators or parameters of the presentation.
//
// Throws Error with a byte position on malformed input.
NcPoly parse_expr(const Presentation* pres, const std::string& text);

}  // namespace supmech
