#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cylabacus/core.hpp"

namespace cylabacus {

// Raised on malformed textual input; `offset` is the byte position of the
// first offending character.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"),
        offset(off) {}
};

// Multipartition grammar:
//   mp   := comp ("/" comp)*
//   comp := "-" | part ("." part)*
//   part := INT ("^" INT)?          with INT >= 1, no leading zeros
// "a^k" expands to k copies of a; each component must be weakly decreasing
// after expansion.
Multipartition parse_multipartition(std::string_view text);
std::string format_multipartition(const Multipartition& mp);

// Comma-separated signed integers, e.g. "-3,-2,-1".
Charge parse_charge(std::string_view text);
std::string format_charge(const Charge& s);

}  // namespace cylabacus
