#pragma once

#include <string_view>

#include "degen/ratfunc.hpp"

namespace degen {

/// Parses an arithmetic expression over integers and symbols into an exact
/// rational function.
///
/// Grammar: `+ - * /`, `^` with integer exponents (a negative exponent is
/// accepted only on the symbol t), parentheses; whitespace-insensitive; no
/// implicit multiplication. Throws SyntaxError with a 1-based position
/// relative to `text`.
RationalFunction parse_expression(std::string_view text);

}  // namespace degen
