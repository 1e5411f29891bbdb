#include "polyforge/evaluate/exact.hpp"

#include <unordered_map>

#include "polyforge/error.hpp"

namespace polyforge::evaluate {

using expr::Node;
using expr::NodeRef;
using expr::Op;

mpq_class eval_exact(const expr::Polynomial& p, const Assignment& at) { return p.evaluate(at); }

std::optional<mpq_class> sinpi_rational(const mpq_class& r) {
  mpq_class six = r * 6;
  if (six.get_den() != 1) return std::nullopt;
  mpz_class k = six.get_num() % 12;
  if (k < 0) k += 12;
  static const int table[12][2] = {{0, 1}, {1, 2}, {1, 1}, {1, 1}, {1, 1}, {1, 2},
                                   {0, 1}, {-1, 2}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 2}};
  // multiples of pi/6: 0, 1/2, sqrt3/2 (irrational), 1, sqrt3/2, 1/2, ...
  long i = k.get_si();
  if (i == 2 || i == 4 || i == 8 || i == 10) return std::nullopt;
  mpq_class v(table[i][0], table[i][1]);
  v.canonicalize();
  return v;
}

mpq_class pow_exact(const mpq_class& base, const mpz_class& exponent) {
  if (exponent < 0) throw MalformedExpression("negative exponent");
  if (exponent == 0) return 1;
  if (base == 0) return 0;
  if (base == 1) return 1;
  if (base == -1) return mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;
  if (exponent > (1 << 20)) throw BudgetExceeded("power too large to evaluate: " + exponent.get_str());
  unsigned long e = exponent.get_ui();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

namespace {

struct Evaluator {
  const Assignment& at;
  std::unordered_map<const Node*, mpq_class> memo;

  mpq_class run(const NodeRef& e) {
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    mpq_class v = compute(*e);
    memo.emplace(e.get(), v);
    return v;
  }

  mpq_class compute(const Node& n) {
    switch (n.op) {
      case Op::Const:
        return mpq_class(n.value);
      case Op::Var: {
        auto it = at.find(n.name);
        if (it == at.end()) throw UnboundVariable(n.name);
        return it->second;
      }
      case Op::Add: {
        mpq_class s = 0;
        for (const auto& a : n.args) s += run(a);
        return s;
      }
      case Op::Mul: {
        mpq_class p = 1;
        for (const auto& a : n.args) {
          p *= run(a);
          if (p == 0) break;
        }
        return p;
      }
      case Op::Neg:
        return -run(n.args[0]);
      case Op::Pow:
        return pow_exact(run(n.args[0]), n.value);
      case Op::SinPi: {
        mpq_class r = run(n.args[0]);
        auto v = sinpi_rational(r);
        if (!v) throw EvaluationOnly("sin(pi * " + r.get_str() + ") is irrational");
        return *v;
      }
      case Op::Apply: {
        std::vector<mpq_class> args;
        for (const auto& a : n.args) args.push_back(run(a));
        return n.fn->call(args);
      }
    }
    throw std::logic_error("unknown node");
  }
};

}  // namespace

mpq_class eval_exact(const NodeRef& e, const Assignment& at) {
  Evaluator ev{at, {}};
  return ev.run(e);
}

}  // namespace polyforge::evaluate
