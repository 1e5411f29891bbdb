#pragma once

#include <map>
#include <optional>
#include <string>

#include "polyforge/expr/dag.hpp"
#include "polyforge/expr/polynomial.hpp"

namespace polyforge::evaluate {

using Assignment = std::map<std::string, mpq_class>;

// UnboundVariable when a variable of the expression is not assigned.
mpq_class eval_exact(const expr::Polynomial& p, const Assignment& at);
// Powers with exponents beyond 2^20 are evaluated only for bases 0 and
// +-1 (BudgetExceeded otherwise). sin(pi r) is rational only when 6r is an
// integer; other arguments throw EvaluationOnly. Applications call the
// function on the evaluated arguments.
mpq_class eval_exact(const expr::NodeRef& e, const Assignment& at);

// sin(pi r) when it is rational, i.e. 6r an integer.
std::optional<mpq_class> sinpi_rational(const mpq_class& r);

mpq_class pow_exact(const mpq_class& base, const mpz_class& exponent);

}  // namespace polyforge::evaluate
