#pragma once

#include <string_view>

#include "chowsym/involution.hpp"

namespace chowsym {

/// Parses cycle notation such as "(1 6)(2 5)(3 4)" or "(16)(25)(34)".
///
/// Whitespace is ignored between cycles. Inside a cycle, letters are separated
/// by spaces or commas; a single unseparated token is read digit by digit, so
/// "(16)" means (1 6). Letters are 1-based. Cycles must have length 1 or 2.
/// When m is 0 the size is the largest letter mentioned. Throws
/// std::invalid_argument on malformed input.
Involution parse_cycles(std::string_view text, int m = 0);

/// Parses one-line notation, "[2,1,4,3]" or "2 1 4 3".
Involution parse_one_line(std::string_view text);

/// Dispatches on the first non-blank character: '(' for cycles, otherwise one-line.
Involution parse_involution(std::string_view text, int m = 0);

}  // namespace chowsym
