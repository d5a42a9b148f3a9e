#pragma once

#include <string>
#include <string_view>

#include "hn/bundle.hpp"

namespace hn {

// Canonical text form: terms "O(s)" or "O(s/r)", with "^m" for multiplicity
// m > 1, joined by " + " in slope-decreasing order. The zero bundle is "0".
std::string to_text(const Bundle& v);

// Parses the grammar
//   bundle := "0" | term ("+" term)*
//   term   := "O" "(" int ("/" posint)? ")" ("^" posint)?
// Whitespace-insensitive. Unreduced slopes are normalized and equal slopes
// merged, so "O(2/4) + O(1/2)" parses to O(1/2)^2. Throws ParseError with the
// offending position on malformed input or a zero denominator.
Bundle parse_bundle(std::string_view text);

// Parses "s" or "s/r" (r > 0) as an exact rational; used for slope-valued
// command-line arguments.
Rational parse_rational(std::string_view text);

}  // namespace hn
