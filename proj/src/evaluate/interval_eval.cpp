#include <unordered_map>

#include "polyforge/error.hpp"
#include "polyforge/evaluate/exact.hpp"
#include "polyforge/evaluate/interval.hpp"

namespace polyforge::evaluate {

using expr::Node;
using expr::NodeRef;
using expr::Op;

namespace {

struct IntervalEvaluator {
  const IntervalBox& box;
  mpfr_prec_t prec;
  std::unordered_map<const Node*, Interval> memo;

  Interval run(const NodeRef& e) {
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    Interval v = compute(*e);
    memo.emplace(e.get(), v);
    return v;
  }

  Interval compute(const Node& n) {
    switch (n.op) {
      case Op::Const:
        return Interval(mpq_class(n.value), prec);
      case Op::Var: {
        auto it = box.find(n.name);
        if (it == box.end()) throw UnboundVariable(n.name);
        return it->second;
      }
      case Op::Add: {
        Interval s(prec);
        for (const auto& a : n.args) s = s + run(a);
        return s;
      }
      case Op::Mul: {
        Interval p(mpq_class(1), prec);
        for (const auto& a : n.args) p = p * run(a);
        return p;
      }
      case Op::Neg:
        return -run(n.args[0]);
      case Op::Pow: {
        Interval base = run(n.args[0]);
        if (n.value.fits_ulong_p()) return base.pow(n.value.get_ui());
        if (base.lo_q() == base.hi_q()) return Interval(pow_exact(base.lo_q(), n.value), prec);
        throw BudgetExceeded("exponent too large for interval evaluation");
      }
      case Op::SinPi:
        return run(n.args[0]).sinpi();
      case Op::Apply: {
        std::vector<mpq_class> args;
        for (const auto& a : n.args) {
          Interval v = run(a);
          if (v.lo_q() != v.hi_q()) throw EvaluationOnly(n.fn->name() + " needs exact arguments");
          args.push_back(v.lo_q());
        }
        return Interval(n.fn->call(args), prec);
      }
    }
    throw std::logic_error("unknown node");
  }
};

}  // namespace

Interval interval_eval(const NodeRef& e, const IntervalBox& box, mpfr_prec_t prec) {
  IntervalEvaluator ev{box, prec, {}};
  return ev.run(e);
}

}  // namespace polyforge::evaluate
