#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polyforge/expr/dag.hpp"
#include "polyforge/expr/polynomial.hpp"

namespace polyforge::expr {

enum class Quantifier { Inf, Sup };
enum class Domain { Nat, Int, Real };

struct QuantBlock {
  Quantifier q;
  Domain dom;
  std::vector<std::string> vars;

  friend bool operator==(const QuantBlock&, const QuantBlock&) = default;
};

using Matrix = std::variant<Polynomial, NodeRef>;

struct ArityReport {
  std::size_t free_count = 0;
  std::vector<std::size_t> block_sizes;
  Degree degree;
  std::size_t var_count = 0;  // free plus bound
  std::string signature;      // e.g. "inf_R(y) sup_R(z) inf_N(n) sup_N(k1..k70)"
};

// A prefix of inf/sup blocks applied to an integer matrix. Variables are
// free, bound by exactly one block, or parameters (left symbolic).
class QuantifiedExpr {
 public:
  QuantifiedExpr(std::vector<QuantBlock> prefix, std::vector<std::string> free, Matrix matrix,
                 std::vector<std::string> params = {});

  const std::vector<QuantBlock>& prefix() const { return prefix_; }
  const std::vector<std::string>& free() const { return free_; }
  const std::vector<std::string>& params() const { return params_; }
  const Matrix& matrix() const { return matrix_; }
  bool is_dag() const { return std::holds_alternative<NodeRef>(matrix_); }

  // free, then bound in prefix order, then parameters
  std::vector<std::string> declaration_order() const;
  std::set<std::string> matrix_variables() const;
  Degree degree() const;
  ArityReport arity() const;

  friend bool operator==(const QuantifiedExpr& a, const QuantifiedExpr& b);

 private:
  std::vector<QuantBlock> prefix_;
  std::vector<std::string> free_;
  std::vector<std::string> params_;
  Matrix matrix_;
};

std::string to_string(Quantifier q);
std::string to_string(Domain d);
// "k1..k70" for numbered runs, comma list otherwise
std::string compress_vars(const std::vector<std::string>& vars);

}  // namespace polyforge::expr
