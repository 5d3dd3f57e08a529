#pragma once

#include <string_view>

#include "bihilbert/bicomplex.hpp"

namespace bihilbert {

/// Evaluates a bicomplex arithmetic expression.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer)*
///   primary := number | i1 | i2 | j | e1 | e2
///            | (conj1 | conj2 | conj3 | sqrt) '(' expr ')'
///            | '(' expr ')'
///
/// Numbers use the usual decimal syntax, so "2e1" is twenty while a bare
/// "e1" is the idempotent. Throws ParseError on malformed input and
/// NullConeError when dividing by (or raising to a negative power) a zero
/// divisor.
Bicomplexd evaluate(std::string_view expr);

}  // namespace bihilbert
