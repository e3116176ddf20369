#pragma once

#include <set>
#include <string>

#include "occert/field.hpp"

namespace occ {

// Parses the field-element grammar: integers, `r2` for sqrt(2), variables
// matching [a-z][a-z0-9]* (except the reserved `r2`), operators + - * / ^
// (integer exponents, negatives allowed) and parentheses.
FieldElem parse_field_elem(const std::string& text, const VarSetPtr& vars);

// Variable names referenced by an expression, for building a variable set
// before parsing.
std::set<std::string> scan_field_variables(const std::string& text);

}  // namespace occ
