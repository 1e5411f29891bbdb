#pragma once

#include <string_view>

#include "polyforge/expr/dag.hpp"

namespace polyforge::expr {

// Parses infix integer-polynomial syntax into a DAG: + - * ^, parentheses
// or brackets, juxtaposition as multiplication. Exponents are constant
// expressions (e.g. x^(5^60)). Throws ParseError.
NodeRef parse_infix(std::string_view text, DagBuilder& b);

// Value of a variable-free DAG of sums, products and powers.
mpz_class constant_value(const NodeRef& e);

}  // namespace polyforge::expr
