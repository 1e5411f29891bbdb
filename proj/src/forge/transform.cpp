#include "polyforge/forge/transform.hpp"

#include <set>

#include "polyforge/error.hpp"

namespace polyforge::forge {

using expr::DagBuilder;
using expr::Domain;
using expr::NodeRef;
using expr::QuantBlock;
using expr::Quantifier;

namespace {

NodeRef matrix_node(const expr::QuantifiedExpr& e, DagBuilder& b) {
  if (const auto* p = std::get_if<expr::Polynomial>(&e.matrix())) return b.from_polynomial(*p);
  return b.import(std::get<NodeRef>(e.matrix()));
}

std::string fresh(const std::string& stem, std::set<std::string>& taken) {
  std::string name = stem;
  while (taken.count(name)) name += "_";
  taken.insert(name);
  return name;
}

}  // namespace

expr::QuantifiedExpr foursquare_transform(const expr::QuantifiedExpr& e) {
  auto order = e.declaration_order();
  std::set<std::string> taken(order.begin(), order.end());
  DagBuilder b;
  std::map<std::string, NodeRef> bind;
  std::vector<QuantBlock> prefix;
  for (const auto& blk : e.prefix()) {
    if (blk.dom != Domain::Nat) {
      prefix.push_back(blk);
      continue;
    }
    QuantBlock out{blk.q, Domain::Int, {}};
    for (const auto& v : blk.vars) {
      std::vector<NodeRef> squares;
      for (int i = 1; i <= 4; ++i) {
        std::string name = fresh(v + "_" + std::to_string(i), taken);
        out.vars.push_back(name);
        squares.push_back(b.square(b.var(name)));
      }
      bind.emplace(v, b.add(squares));
    }
    prefix.push_back(std::move(out));
  }
  NodeRef m = expr::substitute(matrix_node(e, b), bind, b, false);
  if (!e.is_dag()) return expr::QuantifiedExpr(prefix, e.free(), expr::expand(m, 1u << 22), e.params());
  return expr::QuantifiedExpr(prefix, e.free(), m, e.params());
}

expr::QuantifiedExpr trig_relaxation(const expr::QuantifiedExpr& e) {
  const auto& pre = e.prefix();
  if (pre.size() < 2) throw ShapeMismatch("need an inf block over Z followed by a sup block over Z");
  const QuantBlock& yb = pre[pre.size() - 2];
  const QuantBlock& zb = pre.back();
  if (yb.q != Quantifier::Inf || yb.dom != Domain::Int || zb.q != Quantifier::Sup ||
      zb.dom != Domain::Int)
    throw ShapeMismatch("the last two blocks must be inf over Z then sup over Z");

  auto order = e.declaration_order();
  std::set<std::string> taken(order.begin(), order.end());
  std::string beta = fresh("beta", taken);
  std::string gamma = fresh("gamma", taken);

  DagBuilder b;
  auto sin2 = [&](const std::string& v) { return b.square(b.sinpi(b.var(v))); };
  std::vector<NodeRef> ys, zs;
  for (const auto& v : yb.vars) ys.push_back(sin2(v));
  for (const auto& v : zb.vars) zs.push_back(sin2(v));
  NodeRef m = b.add({matrix_node(e, b), b.mul(b.square(b.var(beta)), b.add(ys)),
                     b.neg(b.mul(b.square(b.var(gamma)), b.add(zs)))});

  std::vector<QuantBlock> prefix(pre.begin(), pre.end() - 2);
  prefix.push_back({Quantifier::Inf, Domain::Real, yb.vars});
  std::vector<std::string> sup_vars{beta};
  sup_vars.insert(sup_vars.end(), zb.vars.begin(), zb.vars.end());
  prefix.push_back({Quantifier::Sup, Domain::Real, sup_vars});
  prefix.push_back({Quantifier::Inf, Domain::Real, {gamma}});
  return expr::QuantifiedExpr(prefix, e.free(), m, e.params());
}

std::array<mpz_class, 4> four_squares(const mpz_class& n) {
  if (n < 0) throw OutOfRange("negative argument");
  mpz_class r = sqrt(n);
  for (mpz_class a = r; a >= 0; --a) {
    mpz_class n1 = n - a * a;
    for (mpz_class b2 = sqrt(n1); b2 >= 0; --b2) {
      mpz_class n2 = n1 - b2 * b2;
      for (mpz_class c = sqrt(n2); c >= 0; --c) {
        mpz_class n3 = n2 - c * c;
        mpz_class d = sqrt(n3);
        if (d * d == n3) return {a, b2, c, d};
      }
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace polyforge::forge
