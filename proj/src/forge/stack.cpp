#include <algorithm>

#include "polyforge/error.hpp"
#include "polyforge/forge/ball.hpp"
#include "polyforge/forge/engineer.hpp"

namespace polyforge::forge {

using expr::DagBuilder;
using expr::Domain;
using expr::NodeRef;
using expr::QuantBlock;
using expr::Quantifier;

namespace {

Indicator flatten(Engineered base) {
  std::vector<std::string> w = base.witnesses();
  std::vector<std::string> flat = numbered("k", w.size());
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < w.size(); ++i) names.emplace(w[i], flat[i]);
  for (const auto& x : base.xs)
    if (std::find(flat.begin(), flat.end(), x) != flat.end())
      throw MalformedExpression("free name collides with witness name: " + x);
  DagBuilder b;
  NodeRef p = expr::rename(base.p, names, b);
  expr::QuantifiedExpr q({{Quantifier::Inf, Domain::Nat, {base.n}}, {Quantifier::Sup, Domain::Nat, flat}},
                         base.xs, p, base.params);
  return Indicator{std::move(base), std::move(q), std::move(flat)};
}

}  // namespace

Indicator pi02_indicator(const ce::Pi02Spec& spec, const universal::UniversalPtr& q,
                         const EngineerOptions& opt) {
  Engineered e = engineer(spec.U, q, opt);
  if (e.a != spec.a) throw SpaceMismatch("kernel dimension does not match");
  return flatten(std::move(e));
}

Indicator pi02_indicator_symbolic(std::size_t a, const universal::UniversalPtr& q,
                                  const EngineerOptions& opt) {
  return flatten(engineer_symbolic(a, q, opt));
}

std::size_t stacked_k_count(std::size_t a, std::size_t m, std::size_t nu, Mode mode) {
  return witness_count(a + m, nu, mode);
}

expr::QuantifiedExpr complement(const expr::QuantifiedExpr& e) {
  std::vector<QuantBlock> prefix = e.prefix();
  for (auto& blk : prefix) blk.q = blk.q == Quantifier::Inf ? Quantifier::Sup : Quantifier::Inf;
  if (const auto* poly = std::get_if<expr::Polynomial>(&e.matrix()))
    return expr::QuantifiedExpr(prefix, e.free(), expr::Polynomial(1) - *poly, e.params());
  const NodeRef& old = std::get<NodeRef>(e.matrix());
  if (old->op == expr::Op::Add && old->args.size() == 2 && old->args[0]->op == expr::Op::Const &&
      old->args[0]->value == 1 && old->args[1]->op == expr::Op::Neg)
    return expr::QuantifiedExpr(prefix, e.free(), old->args[1]->args[0], e.params());
  DagBuilder b;
  NodeRef m = b.sub(b.constant(1), b.import(old));
  return expr::QuantifiedExpr(prefix, e.free(), m, e.params());
}

Stacked stack(const SigmaSpec& spec, const universal::UniversalPtr& q, const EngineerOptions& opt) {
  if (spec.level == 0) throw std::invalid_argument("projective level must be at least 1");
  std::vector<std::string> free = spec.free.empty() ? default_reals(spec.ambient) : spec.free;
  std::vector<std::string> bound = spec.bound;
  if (bound.empty())
    bound = spec.level == 1 ? std::vector<std::string>{"z"} : numbered("z", spec.level);
  if (free.size() != spec.ambient || bound.size() != spec.level)
    throw DimensionMismatch("name lists do not match the ambient dimension and level");

  EngineerOptions o = opt;
  o.reals = free;
  o.reals.insert(o.reals.end(), bound.begin(), bound.end());
  Indicator ind = spec.kernel
                      ? pi02_indicator(ce::Pi02Spec(spec.kernel, spec.ambient + spec.level), q, o)
                      : pi02_indicator_symbolic(spec.ambient + spec.level, q, o);

  // Sigma form: sup z1 inf z2 ... with the kernel itself when the innermost
  // real quantifier is sup, and its complement when it is inf.
  std::vector<QuantBlock> prefix;
  for (std::size_t i = 0; i < spec.level; ++i)
    prefix.push_back({i % 2 == 0 ? Quantifier::Sup : Quantifier::Inf, Domain::Real, {bound[i]}});
  const expr::QuantifiedExpr& kernel = ind.expr;
  expr::QuantifiedExpr inner = prefix.back().q == Quantifier::Sup ? kernel : complement(kernel);
  prefix.insert(prefix.end(), inner.prefix().begin(), inner.prefix().end());
  expr::QuantifiedExpr sigma(prefix, free, inner.matrix(), inner.params());

  expr::QuantifiedExpr out = spec.cls == Pointclass::Sigma ? sigma : complement(sigma);
  return Stacked{std::move(ind), std::move(out)};
}

}  // namespace polyforge::forge
