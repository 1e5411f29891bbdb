#include "polyforge/evaluate/search.hpp"

#include <functional>

#include "polyforge/error.hpp"

namespace polyforge::evaluate {

using expr::Domain;
using expr::QuantBlock;
using expr::Quantifier;

void Budget::validate() const {
  if (nat_bound < 1) throw std::invalid_argument("natBound must be at least 1");
  if (threshold <= 1) throw std::invalid_argument("threshold must exceed 1");
  if (real_step <= 0 || real_bound < 0) throw std::invalid_argument("bad real grid");
}

Budget Budget::scaled(std::size_t s) const {
  Budget out = *this;
  mpz_class f = mpz_class(1) << s;
  out.nat_bound = nat_bound * f;
  out.real_bound = real_bound * f;
  out.real_step = real_step / f;
  out.set_steps = set_steps * f;
  return out;
}

std::string to_string(ExtRealClass::Kind k) {
  switch (k) {
    case ExtRealClass::Kind::ValueZero: return "ValueZero";
    case ExtRealClass::Kind::ValueOne: return "ValueOne";
    case ExtRealClass::Kind::Finite: return "Finite";
    case ExtRealClass::Kind::ExceedsThreshold: return "ExceedsThreshold";
    case ExtRealClass::Kind::LowerBoundSoFar: return "LowerBoundSoFar";
    case ExtRealClass::Kind::UpperBoundSoFar: return "UpperBoundSoFar";
  }
  return "?";
}

std::string ExtRealClass::to_string() const {
  using K = Kind;
  switch (kind) {
    case K::ValueZero:
    case K::ValueOne:
      return evaluate::to_string(kind);
    default:
      return evaluate::to_string(kind) + "(" + value.get_str() + ")";
  }
}

namespace {

// [lo, hi] of possible true values implied by a verdict; nullopt = unbounded
struct Range {
  std::optional<mpq_class> lo, hi;
};

Range range_of(const ExtRealClass& c) {
  using K = ExtRealClass::Kind;
  switch (c.kind) {
    case K::ValueZero: return {mpq_class(0), mpq_class(0)};
    case K::ValueOne: return {mpq_class(1), mpq_class(1)};
    case K::Finite: return {c.value, c.value};
    case K::ExceedsThreshold: return {c.value, std::nullopt};
    case K::LowerBoundSoFar: return {c.value, std::nullopt};
    case K::UpperBoundSoFar: return {std::nullopt, c.value};
  }
  return {};
}

}  // namespace

bool compatible(const ExtRealClass& a, const ExtRealClass& b) {
  Range ra = range_of(a), rb = range_of(b);
  if (ra.lo && rb.hi && *ra.lo > *rb.hi) return false;
  if (rb.lo && ra.hi && *rb.lo > *ra.hi) return false;
  return true;
}

namespace {

std::vector<mpq_class> candidates(Domain d, const Budget& b) {
  std::vector<mpq_class> out;
  switch (d) {
    case Domain::Nat:
      for (mpz_class i = 0; i <= b.nat_bound; ++i) out.emplace_back(i);
      break;
    case Domain::Int:
      out.emplace_back(0);
      for (mpz_class i = 1; i <= b.nat_bound; ++i) {
        out.emplace_back(i);
        out.emplace_back(-i);
      }
      break;
    case Domain::Real: {
      out.emplace_back(0);
      for (mpz_class i = 1; mpq_class(i) * b.real_step <= b.real_bound; ++i) {
        out.emplace_back(mpq_class(i) * b.real_step);
        out.emplace_back(-mpq_class(i) * b.real_step);
      }
      break;
    }
  }
  return out;
}

struct Search {
  const expr::QuantifiedExpr& q;
  const Budget& b;
  Assignment at;
  std::size_t evaluations = 0;
  std::vector<std::vector<mpq_class>> ranges;

  mpq_class matrix_value() {
    if (++evaluations > b.max_evaluations)
      throw BudgetExceeded("bounded search exceeded " + std::to_string(b.max_evaluations) +
                           " evaluations");
    if (const auto* p = std::get_if<expr::Polynomial>(&q.matrix())) return eval_exact(*p, at);
    return eval_exact(std::get<expr::NodeRef>(q.matrix()), at);
  }

  mpq_class block(std::size_t i) {
    if (i == q.prefix().size()) return matrix_value();
    const QuantBlock& blk = q.prefix()[i];
    const auto& range = ranges[i];
    bool sup = blk.q == Quantifier::Sup;
    std::optional<mpq_class> best;
    std::function<void(std::size_t)> odometer = [&](std::size_t v) {
      if (v == blk.vars.size()) {
        mpq_class val = block(i + 1);
        if (!best || (sup ? val > *best : val < *best)) best = val;
        return;
      }
      for (const auto& c : range) {
        at[blk.vars[v]] = c;
        odometer(v + 1);
      }
    };
    odometer(0);
    for (const auto& v : blk.vars) at.erase(v);
    return *best;
  }
};

}  // namespace

mpq_class bounded_value(const expr::QuantifiedExpr& q, const Assignment& free, const Budget& b) {
  b.validate();
  Search s{q, b, free, 0, {}};
  for (const auto& blk : q.prefix()) s.ranges.push_back(candidates(blk.dom, b));
  return s.block(0);
}

ExtRealClass sup_inf_eval(const expr::QuantifiedExpr& q, const Assignment& free, const Budget& b) {
  using K = ExtRealClass::Kind;
  if (!q.params().empty()) throw EvaluationOnly("expression has symbolic parameters");
  if (free.size() != q.free().size())
    throw AssignmentMismatch("expected " + std::to_string(q.free().size()) + " free values");
  for (const auto& v : q.free())
    if (!free.count(v)) throw AssignmentMismatch("missing free variable " + v);

  mpq_class v = bounded_value(q, free, b);
  bool sup_root = !q.prefix().empty() && q.prefix().front().q == Quantifier::Sup;
  if (sup_root && v > b.threshold) return ExtRealClass::of(K::ExceedsThreshold, b.threshold);
  bool stable = true;
  if (!q.prefix().empty())
    for (std::size_t s = 1; s <= b.stages && stable; ++s)
      stable = bounded_value(q, free, b.scaled(s)) == v;
  if (stable) {
    if (v == 0) return ExtRealClass::of(K::ValueZero);
    if (v == 1) return ExtRealClass::of(K::ValueOne, 1);
    return ExtRealClass::of(K::Finite, v);
  }
  return ExtRealClass::of(sup_root ? K::LowerBoundSoFar : K::UpperBoundSoFar, v);
}

}  // namespace polyforge::evaluate
