#include "polyforge/expr/dag.hpp"

#include <functional>

#include "polyforge/error.hpp"

namespace polyforge::expr {
namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = std::hash<long>()(mpz_sgn(z.get_mpz_t()));
  std::size_t limbs = mpz_size(z.get_mpz_t());
  h = mix(h, limbs);
  if (limbs > 0) h = mix(h, mpz_getlimbn(z.get_mpz_t(), 0));
  return h;
}

bool same_node(const Node& a, const Node& b) {
  return a.op == b.op && a.value == b.value && a.name == b.name && a.fn == b.fn &&
         a.args == b.args;
}

}  // namespace

NodeRef DagBuilder::intern(Node n) {
  std::size_t h = mix(std::size_t(n.op), hash_mpz(n.value));
  h = mix(h, std::hash<std::string>()(n.name));
  h = mix(h, std::hash<const void*>()(n.fn.get()));
  for (const auto& a : n.args) h = mix(h, a->hash);
  n.hash = h;
  auto [lo, hi] = pool_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (same_node(*it->second, n)) return it->second;
  auto ref = std::make_shared<const Node>(std::move(n));
  pool_.emplace(h, ref);
  return ref;
}

NodeRef DagBuilder::constant(const mpz_class& c) {
  Node n{Op::Const, c, {}, {}, nullptr};
  return intern(std::move(n));
}

NodeRef DagBuilder::var(const std::string& name) {
  if (name.empty()) throw MalformedExpression("empty variable name");
  Node n{Op::Var, 0, name, {}, nullptr};
  return intern(std::move(n));
}

NodeRef DagBuilder::add(std::vector<NodeRef> terms) {
  if (terms.empty()) return constant(0);
  if (terms.size() == 1) return terms.front();
  Node n{Op::Add, 0, {}, std::move(terms), nullptr};
  return intern(std::move(n));
}

NodeRef DagBuilder::sub(NodeRef a, NodeRef b) { return add(std::move(a), neg(std::move(b))); }

NodeRef DagBuilder::mul(std::vector<NodeRef> factors) {
  if (factors.empty()) return constant(1);
  if (factors.size() == 1) return factors.front();
  Node n{Op::Mul, 0, {}, std::move(factors), nullptr};
  return intern(std::move(n));
}

NodeRef DagBuilder::neg(NodeRef a) {
  Node n{Op::Neg, 0, {}, {std::move(a)}, nullptr};
  return intern(std::move(n));
}

NodeRef DagBuilder::pow(NodeRef base, const mpz_class& exponent) {
  if (exponent < 0) throw MalformedExpression("negative exponent");
  Node n{Op::Pow, exponent, {}, {std::move(base)}, nullptr};
  return intern(std::move(n));
}

NodeRef DagBuilder::sinpi(NodeRef arg) {
  Node n{Op::SinPi, 0, {}, {std::move(arg)}, nullptr};
  return intern(std::move(n));
}

NodeRef DagBuilder::apply(std::shared_ptr<const Callable> fn, std::vector<NodeRef> args) {
  if (!fn) throw MalformedExpression("null callable");
  if (args.size() != fn->unknown_count() + 1)
    throw MalformedExpression("wrong argument count for " + fn->name());
  Node n{Op::Apply, 0, {}, std::move(args), std::move(fn)};
  return intern(std::move(n));
}

NodeRef DagBuilder::from_polynomial(const Polynomial& p) {
  std::vector<NodeRef> terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<NodeRef> fs;
    bool negative = c < 0;
    mpz_class mag = abs(c);
    if (mag != 1 || m.is_one()) fs.push_back(constant(mag));
    for (const auto& [v, e] : m.factors())
      fs.push_back(e == 1 ? var(v) : pow(var(v), mpz_class(e)));
    NodeRef t = mul(std::move(fs));
    terms.push_back(negative ? neg(t) : t);
  }
  return add(std::move(terms));
}

NodeRef DagBuilder::import(const NodeRef& n) {
  auto it = imported_.find(n.get());
  if (it != imported_.end()) return it->second;
  Node copy{n->op, n->value, n->name, {}, n->fn};
  for (const auto& a : n->args) copy.args.push_back(import(a));
  NodeRef r = intern(std::move(copy));
  imported_.emplace(n.get(), r);
  return r;
}

Degree degree(const NodeRef& e) {
  std::unordered_map<const Node*, Degree> memo;
  std::function<Degree(const NodeRef&)> go = [&](const NodeRef& n) -> Degree {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    Degree d;
    switch (n->op) {
      case Op::Const:
        d = n->value == 0 ? Degree::minus_infinity() : Degree();
        break;
      case Op::Var:
        d = Degree(1L);
        break;
      case Op::Add:
        d = Degree::minus_infinity();
        for (const auto& a : n->args) d = max(d, go(a));
        break;
      case Op::Mul:
        d = Degree();
        for (const auto& a : n->args) d = d + go(a);
        break;
      case Op::Neg:
        d = go(n->args[0]);
        break;
      case Op::Pow:
        d = go(n->args[0]).times(n->value);
        break;
      case Op::SinPi:
        d = Degree();
        break;
      case Op::Apply: {
        Degree inner;
        for (const auto& a : n->args) inner = max(inner, go(a));
        Degree delta = n->fn->degree();
        d = delta.is_minus_infinity() ? delta : inner.times(delta.value());
        break;
      }
    }
    memo.emplace(n.get(), d);
    return d;
  };
  return go(e);
}

Polynomial expand(const NodeRef& e, std::size_t term_budget) {
  if (term_budget == 0) throw std::invalid_argument("term budget must be positive");
  std::unordered_map<const Node*, Polynomial> memo;
  auto check = [&](const Polynomial& p) {
    if (p.term_count() > term_budget)
      throw BudgetExceeded("expansion exceeds " + std::to_string(term_budget) + " terms");
  };
  std::function<const Polynomial&(const NodeRef&)> go = [&](const NodeRef& n) -> const Polynomial& {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    Polynomial p;
    switch (n->op) {
      case Op::Const:
        p = Polynomial(n->value);
        break;
      case Op::Var:
        p = Polynomial::variable(n->name);
        break;
      case Op::Add:
        for (const auto& a : n->args) {
          p += go(a);
          check(p);
        }
        break;
      case Op::Mul:
        p = Polynomial(1);
        for (const auto& a : n->args) {
          p *= go(a);
          check(p);
        }
        break;
      case Op::Neg:
        p = -go(n->args[0]);
        break;
      case Op::Pow: {
        const Polynomial& base = go(n->args[0]);
        if (n->value == 0) {
          p = Polynomial(1);
        } else if (base.is_zero()) {
          p = Polynomial();
        } else if (base.is_constant() && base.coefficient(Monomial()) * base.coefficient(Monomial()) == 1) {
          mpz_class c = base.coefficient(Monomial());
          p = Polynomial((c < 0 && mpz_odd_p(n->value.get_mpz_t())) ? -1 : 1);
        } else {
          if (!n->value.fits_ulong_p() || n->value > UINT32_MAX)
            throw BudgetExceeded("exponent " + n->value.get_str() + " too large to expand");
          Exponent k = Exponent(n->value.get_ui());
          Polynomial result(1), b = base;
          while (k > 0) {
            if (k & 1u) {
              result *= b;
              check(result);
            }
            k >>= 1;
            if (k > 0) {
              b *= b;
              check(b);
            }
          }
          p = std::move(result);
        }
        break;
      }
      case Op::SinPi:
        throw MalformedExpression("sin is not a polynomial");
      case Op::Apply:
        throw EvaluationOnly("opaque application " + n->fn->name() + " cannot be expanded");
    }
    check(p);
    return memo.emplace(n.get(), std::move(p)).first->second;
  };
  return go(e);
}

std::set<std::string> variables(const NodeRef& e) {
  std::set<std::string> out;
  std::set<const Node*> seen;
  std::function<void(const NodeRef&)> go = [&](const NodeRef& n) {
    if (!seen.insert(n.get()).second) return;
    if (n->op == Op::Var) out.insert(n->name);
    for (const auto& a : n->args) go(a);
  };
  go(e);
  return out;
}

std::size_t node_count(const NodeRef& e) {
  std::set<const Node*> seen;
  std::function<void(const NodeRef&)> go = [&](const NodeRef& n) {
    if (!seen.insert(n.get()).second) return;
    for (const auto& a : n->args) go(a);
  };
  go(e);
  return seen.size();
}

bool contains_op(const NodeRef& e, Op op) {
  std::set<const Node*> seen;
  std::function<bool(const NodeRef&)> go = [&](const NodeRef& n) {
    if (!seen.insert(n.get()).second) return false;
    if (n->op == op) return true;
    for (const auto& a : n->args)
      if (go(a)) return true;
    return false;
  };
  return go(e);
}

bool structurally_equal(const NodeRef& a, const NodeRef& b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->op != b->op || a->value != b->value || a->name != b->name ||
      a->fn != b->fn || a->args.size() != b->args.size())
    return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!structurally_equal(a->args[i], b->args[i])) return false;
  return true;
}

NodeRef substitute(const NodeRef& e, const std::map<std::string, NodeRef>& bindings,
                   DagBuilder& b, bool strict) {
  if (strict) {
    auto vs = variables(e);
    for (const auto& [name, v] : bindings)
      if (!vs.count(name)) throw UnknownVariable(name);
  }
  std::unordered_map<const Node*, NodeRef> memo;
  std::function<NodeRef(const NodeRef&)> go = [&](const NodeRef& n) -> NodeRef {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    NodeRef r;
    if (n->op == Op::Var) {
      auto bt = bindings.find(n->name);
      r = bt == bindings.end() ? b.var(n->name) : b.import(bt->second);
    } else {
      std::vector<NodeRef> args;
      for (const auto& a : n->args) args.push_back(go(a));
      switch (n->op) {
        case Op::Const: r = b.constant(n->value); break;
        case Op::Add: r = b.add(std::move(args)); break;
        case Op::Mul: r = b.mul(std::move(args)); break;
        case Op::Neg: r = b.neg(args[0]); break;
        case Op::Pow: r = b.pow(args[0], n->value); break;
        case Op::SinPi: r = b.sinpi(args[0]); break;
        case Op::Apply: r = b.apply(n->fn, std::move(args)); break;
        case Op::Var: break;
      }
    }
    memo.emplace(n.get(), r);
    return r;
  };
  return go(e);
}

NodeRef substitute(const NodeRef& e, const std::map<std::string, Polynomial>& bindings,
                   DagBuilder& b, bool strict) {
  std::map<std::string, NodeRef> nodes;
  for (const auto& [name, p] : bindings) nodes.emplace(name, b.from_polynomial(p));
  return substitute(e, nodes, b, strict);
}

NodeRef rename(const NodeRef& e, const std::map<std::string, std::string>& names, DagBuilder& b) {
  std::map<std::string, NodeRef> nodes;
  auto vs = variables(e);
  for (const auto& [from, to] : names)
    if (vs.count(from)) nodes.emplace(from, b.var(to));
  return substitute(e, nodes, b, false);
}

}  // namespace polyforge::expr
