#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "polyforge/expr/degree.hpp"
#include "polyforge/expr/polynomial.hpp"

namespace polyforge::expr {

// An opaque function applied inside an expression: a universal polynomial
// whose body is not expanded into the DAG. Arguments are the unknowns
// followed by one distinguished argument.
class Callable {
 public:
  virtual ~Callable() = default;
  virtual const std::string& name() const = 0;
  virtual std::size_t unknown_count() const = 0;
  virtual Degree degree() const = 0;
  virtual bool evaluation_only() const = 0;
  // Value at natural arguments; throws EvaluationOnly when no body exists.
  virtual mpq_class call(const std::vector<mpq_class>& args) const = 0;
};

enum class Op { Const, Var, Add, Mul, Neg, Pow, SinPi, Apply };

struct Node;
using NodeRef = std::shared_ptr<const Node>;

struct Node {
  Op op;
  mpz_class value;  // Const: the constant; Pow: the exponent
  std::string name;  // Var
  std::vector<NodeRef> args;
  std::shared_ptr<const Callable> fn;  // Apply
  std::size_t hash = 0;
};

// Creates nodes with structural sharing: building the same subterm twice
// returns the same node.
class DagBuilder {
 public:
  NodeRef constant(const mpz_class& c);
  NodeRef var(const std::string& name);
  NodeRef add(std::vector<NodeRef> terms);
  NodeRef add(NodeRef a, NodeRef b) { return add(std::vector<NodeRef>{std::move(a), std::move(b)}); }
  NodeRef sub(NodeRef a, NodeRef b);
  NodeRef mul(std::vector<NodeRef> factors);
  NodeRef mul(NodeRef a, NodeRef b) { return mul(std::vector<NodeRef>{std::move(a), std::move(b)}); }
  NodeRef neg(NodeRef a);
  NodeRef pow(NodeRef base, const mpz_class& exponent);
  NodeRef square(NodeRef a) { return pow(std::move(a), 2); }
  NodeRef sinpi(NodeRef arg);  // sin(pi * arg)
  NodeRef apply(std::shared_ptr<const Callable> fn, std::vector<NodeRef> args);

  NodeRef from_polynomial(const Polynomial& p);
  // Re-creates a node built elsewhere inside this builder.
  NodeRef import(const NodeRef& n);

  std::size_t size() const { return pool_.size(); }

 private:
  NodeRef intern(Node n);
  std::unordered_multimap<std::size_t, NodeRef> pool_;
  std::unordered_map<const Node*, NodeRef> imported_;
};

// Degree without expansion: max over sums, sum over products, scaled by
// exponents. An upper bound for the degree of the expanded polynomial.
Degree degree(const NodeRef& e);

// Full expansion; BudgetExceeded once any intermediate result has more
// than term_budget terms or an exponent does not fit a machine word.
Polynomial expand(const NodeRef& e, std::size_t term_budget);

std::set<std::string> variables(const NodeRef& e);
std::size_t node_count(const NodeRef& e);
bool structurally_equal(const NodeRef& a, const NodeRef& b);
bool contains_op(const NodeRef& e, Op op);

// Simultaneous substitution of variables; UnknownVariable for keys that do
// not occur in e when strict.
NodeRef substitute(const NodeRef& e, const std::map<std::string, NodeRef>& bindings,
                   DagBuilder& b, bool strict = true);
NodeRef substitute(const NodeRef& e, const std::map<std::string, Polynomial>& bindings,
                   DagBuilder& b, bool strict = true);
NodeRef rename(const NodeRef& e, const std::map<std::string, std::string>& names, DagBuilder& b);

}  // namespace polyforge::expr
