#pragma once

#include <string>
#include <vector>

#include "schubert/charring.hpp"
#include "schubert/poly.hpp"

namespace schubert {

using Word = std::vector<int>;

std::string var_name(VarSpace vs, int i);  // 1-based

// Canonical renderings.  Polynomial monomials are sorted in descending graded
// lexicographic order ("a1*a2 + a1*a3 + a2^2 + ..."); characters render each
// term as c*e^{2a1+3a2} with exponents sorted the same way.  These strings
// are what the CLI emits and what the golden tests pin down.
std::string to_string(const Rat& c);
std::string to_string(const Poly& p);
std::string to_string(const Char& c);
std::string format_exponent(VarSpace vs, const Coords& mu);

// Inverse of the canonical renderings (used for the round-trip checks and for
// reading golden values).
Poly parse_poly(const std::string& text, VarSpace vs);
Char parse_char(const std::string& text, VarSpace vs);

std::string format_word(const Word& w);
Word parse_word(const std::string& text);

}  // namespace schubert
