#pragma once

#include <set>
#include <string>

#include "occert/words.hpp"

namespace occ {

// Word grammar: `x(+1,<field-expr>)` / `x(-1,<field-expr>)` for Steinberg
// letters, bare identifiers for named generators, `W1*W2`, `W^n` with integer
// n, `[W1,W2]`, `conj(G,W)`, parentheses, and `1` for the identity.
Word parse_word(const std::string& text, const VarSetPtr& vars);

// Field variables referenced inside x(...) parameters.
std::set<std::string> scan_word_variables(const std::string& text);

}  // namespace occ
