#pragma once

#include <string>

#include "weingarten/rational_expr.hpp"

namespace weingarten::cas {

/// Parses an exact expression over an alphabet. Grammar: + - * / ^ with
/// parentheses, integer literals, and symbol names (apostrophes allowed, as
/// in r''). Division is exact and may yield a genuine quotient.
RationalExpr parse_expression(const AlphabetPtr& alphabet, const std::string& text);

/// As parse_expression, demanding a polynomial (constant denominator).
Polynomial parse_polynomial(const AlphabetPtr& alphabet, const std::string& text);

}  // namespace weingarten::cas
