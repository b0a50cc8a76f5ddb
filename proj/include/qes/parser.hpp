#pragma once

#include "qes/multipoly.hpp"
#include "qes/xpoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qes {

// Expression language: + - * / ^ and parentheses, integer literals, names
// matching [a-zA-Z][a-zA-Z0-9_]*. Exponents are non-negative integer literals;
// divisors must evaluate to nonzero rational constants. "x" is the spatial
// variable; every other name must be in the registry.
//
// Errors are ParseError carrying line/column (line is supplied by the caller).
XPoly parse_xpoly(std::string_view text, const RegistryPtr& registry, int line = 1);

// Same language without x.
MultiPoly parse_multipoly(std::string_view text, const RegistryPtr& registry, int line = 1);

// Names other than x, in order of first appearance.
std::vector<std::string> collect_identifiers(std::string_view text, int line = 1);

}  // namespace qes
