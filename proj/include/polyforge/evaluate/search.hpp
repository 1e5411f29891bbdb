#pragma once

#include <string>

#include "polyforge/evaluate/exact.hpp"
#include "polyforge/expr/quantified.hpp"

namespace polyforge::evaluate {

struct Budget {
  mpz_class nat_bound = 16;   // N ranges over [0, B], Z over [-B, B]
  mpq_class real_step = 1;    // R ranges over i * step with |i * step| <= bound
  mpq_class real_bound = 4;
  mpq_class threshold = 1000; // sup values above this count as divergent
  std::size_t stages = 1;     // extra doubled budgets used to confirm a value
  mpz_class set_steps = 1024; // enumeration steps granted to semi-open sets
  std::size_t max_evaluations = 20'000'000;

  // natBound >= 1, threshold > 1, step > 0
  void validate() const;
  // nat and real bounds times 2^s, grid step divided by 2^s
  Budget scaled(std::size_t s) const;
};

struct ExtRealClass {
  enum class Kind { ValueZero, ValueOne, Finite, ExceedsThreshold, LowerBoundSoFar, UpperBoundSoFar };
  Kind kind;
  mpq_class value;  // the searched value; the threshold for ExceedsThreshold

  static ExtRealClass of(Kind k, mpq_class v = 0) { return {k, std::move(v)}; }
  std::string to_string() const;
  friend bool operator==(const ExtRealClass& a, const ExtRealClass& b) {
    return a.kind == b.kind && a.value == b.value;
  }
};

std::string to_string(ExtRealClass::Kind k);

// Could both verdicts describe the same true value?
bool compatible(const ExtRealClass& a, const ExtRealClass& b);

// Nested bounded search: the max over each sup block and the min over each
// inf block of the searched ranges. BudgetExceeded past max_evaluations.
mpq_class bounded_value(const expr::QuantifiedExpr& q, const Assignment& free, const Budget& b);

// Classifies bounded_value at b. A sup-rooted value above the threshold is
// ExceedsThreshold. A value that stays put through every extra stage is
// exact (ValueZero, ValueOne or Finite); otherwise it is a one-sided bound
// for the root quantifier. AssignmentMismatch unless the assignment covers
// exactly the free variables; EvaluationOnly when parameters are present.
ExtRealClass sup_inf_eval(const expr::QuantifiedExpr& q, const Assignment& free, const Budget& b);

}  // namespace polyforge::evaluate
