#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "polyforge/expr/quantified.hpp"

namespace polyforge::expr {

enum class Format { Text, LaTeX, Json };

std::string emit(const QuantifiedExpr& q, Format f);

// Terms of p in graded lexicographic order with respect to `order`.
std::vector<std::pair<Monomial, mpz_class>> canonical_terms(const Polynomial& p,
                                                            const std::vector<std::string>& order);

std::string render_text(const Polynomial& p, const std::vector<std::string>& order = {});
std::string render_text(const NodeRef& e);
std::string render_latex(const Polynomial& p, const std::vector<std::string>& order = {});
std::string render_latex(const NodeRef& e);
std::string latex_var(const std::string& name);

using CallableResolver = std::function<std::shared_ptr<const Callable>(const std::string&)>;

// Inverse of emit(q, Format::Json). Opaque applications are looked up by
// name through the resolver. Throws ParseError.
QuantifiedExpr parse_json(const std::string& text, const CallableResolver& resolve = {});

}  // namespace polyforge::expr
