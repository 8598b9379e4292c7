#pragma once

// Concrete syntax for standard parameters:
//
//   param    := summand ("+" summand)*
//   summand  := label ("[" INT "]")?          absent brackets mean d = 1
//   label    := "1" | "D" INT ("." INT)? ("!0" | "!nz")?
//
// "D12" is the weight-12 eigenform, "D24.2" the second eigenform of weight
// 24 (an index is required when dim S_k > 1). "!0" / "!nz" force the central
// value L(1/2) to vanish / not vanish. Whitespace between tokens is ignored.
// Labels use the modular weight k; the motivic weight is k - 1.

#include <string>
#include <string_view>
#include <vector>

#include "unimod/arthur.hpp"

namespace unimod {

// Unvalidated parameter (see validate()). Throws SyntaxError with a 1-based
// column, AmbiguousLabel or BadIndex. Warnings (e.g. weights above the
// dimension table) are appended when `warnings` is non-null.
ArthurParameter parse_parameter(std::string_view text, int m, std::vector<std::string>* warnings = nullptr);

CuspidalLabel parse_label(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Summands sorted by descending n*d, then label (1 first, then weight and
// index ascending).
ArthurParameter canonical(const ArthurParameter& psi);

// Canonical text, e.g. "1[15]+1", "D12[4]+1[7]+1", "D16!0[16]".
std::string format(const ArthurParameter& psi);

// Lines "labelA labelB +1|-1"; '#' starts a comment. Throws ParseError.
EpsilonTable parse_epsilon_table(std::string_view text);

}  // namespace unimod
