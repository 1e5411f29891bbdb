#include "polyforge/forge/engineer.hpp"

#include <set>

#include "polyforge/ce/w1.hpp"
#include "polyforge/error.hpp"
#include "polyforge/forge/ball.hpp"

namespace polyforge::forge {

using expr::DagBuilder;
using expr::Degree;
using expr::NodeRef;

std::string to_string(Mode m) { return m == Mode::MinDegree ? "min-degree" : "min-vars"; }

Mode parse_mode(const std::string& s) {
  if (s == "min-degree" || s == "degree") return Mode::MinDegree;
  if (s == "min-vars" || s == "vars") return Mode::MinVars;
  throw std::invalid_argument("unknown mode: " + s);
}

std::size_t witness_count(std::size_t a, std::size_t nu, Mode mode) {
  return mode == Mode::MinDegree ? nu + 2 * (3 + a) : nu + 1 + 3 + a;
}

Degree engineered_degree(std::size_t a, const Degree& delta, Mode mode) {
  Degree universal_part = Degree(3) + delta;
  if (mode == Mode::MinDegree) return max(universal_part, Degree(7));
  mpz_class chain;
  mpz_ui_pow_ui(chain.get_mpz_t(), 2, 4 + a);
  return max(universal_part, Degree(mpz_class(3 + chain)));
}

Degree nominal_min_vars_degree(std::size_t a, const Degree& delta) {
  return max(Degree(3) + delta, Degree(static_cast<long>(11 + 2 * a)));
}

std::vector<std::string> Engineered::witnesses() const {
  std::vector<std::string> w = ys;
  w.insert(w.end(), ls.begin(), ls.end());
  w.insert(w.end(), ks.begin(), ks.end());
  return w;
}

expr::QuantifiedExpr Engineered::quantified() const {
  std::vector<std::string> free = xs;
  free.push_back(n);
  return expr::QuantifiedExpr({{expr::Quantifier::Sup, expr::Domain::Nat, witnesses()}}, free, p,
                              params);
}

Degree Engineered::nominal_degree() const {
  if (mode == Mode::MinDegree) return engineered_degree(a, universal->delta(), mode);
  return nominal_min_vars_degree(a, universal->delta());
}

namespace {

void check_oracle_space(const universal::UniversalPtr& q, std::size_t a) {
  if (q->kind() != universal::UniversalPoly::Kind::Virtual) return;
  auto w1 = std::dynamic_pointer_cast<const ce::W1Set>(q->oracle());
  if (w1 && w1->ambient() != a)
    throw SpaceMismatch("oracle universal is over R^" + std::to_string(w1->ambient()) +
                        " x N, expected R^" + std::to_string(a) + " x N");
}

NodeRef universal_term(const universal::UniversalPtr& q, const std::vector<std::string>& ys,
                       const std::string& l, bool zero_based, DagBuilder& b) {
  if (q->has_body()) {
    NodeRef body = b.import(q->body());
    if (zero_based) {
      std::vector<std::string> shifted = q->unknowns();
      shifted.push_back(q->argument());
      body = universal::shift_one_based(body, shifted, b);
    }
    std::map<std::string, NodeRef> bind;
    for (std::size_t i = 0; i < ys.size(); ++i) bind.emplace(q->unknowns()[i], b.var(ys[i]));
    bind.emplace(q->argument(), b.var(l));
    return expr::substitute(body, bind, b, false);
  }
  std::vector<NodeRef> args;
  for (const auto& y : ys) args.push_back(b.var(y));
  args.push_back(b.var(l));
  return b.apply(q, args);
}

}  // namespace

Engineered engineer_symbolic(std::size_t a, const universal::UniversalPtr& q,
                             const EngineerOptions& opt) {
  if (a == 0) throw SpaceMismatch("ambient dimension must be positive");
  if (!q) throw std::invalid_argument("null universal polynomial");
  check_oracle_space(q, a);

  Engineered e;
  e.a = a;
  e.mode = opt.mode;
  e.universal = q;
  e.xs = opt.reals.empty() ? default_reals(a) : opt.reals;
  if (e.xs.size() != a) throw DimensionMismatch("expected " + std::to_string(a) + " real names");
  e.n = opt.section;
  e.ys = numbered("y", q->nu());
  e.ls = opt.mode == Mode::MinDegree ? numbered("l", 3 + a) : std::vector<std::string>{"l"};
  e.ks = numbered("k", 3 + a);
  e.params = q->params();

  std::set<std::string> seen;
  for (const auto* group : {&e.xs, &e.ys, &e.ls, &e.ks, &e.params})
    for (const auto& v : *group)
      if (!seen.insert(v).second) throw MalformedExpression("name used twice: " + v);
  if (seen.count(e.n)) throw MalformedExpression("name used twice: " + e.n);

  DagBuilder b;
  auto k = [&](std::size_t i) { return b.var(e.ks[i - 1]); };

  std::vector<NodeRef> squares;
  if (opt.mode == Mode::MinDegree) {
    squares.push_back(b.square(b.sub(b.var(e.ls[0]), pair2_dag(b.var(e.n), k(1), b))));
    for (std::size_t i = 1; i < e.ls.size(); ++i)
      squares.push_back(b.square(b.sub(b.var(e.ls[i]), pair2_dag(b.var(e.ls[i - 1]), k(i + 1), b))));
  } else {
    std::vector<NodeRef> chain{b.var(e.n)};
    for (std::size_t i = 1; i <= e.ks.size(); ++i) chain.push_back(k(i));
    squares.push_back(b.square(b.sub(b.var(e.ls[0]), pairN_dag(chain, b))));
  }
  e.penalty = b.add(squares);
  e.q = universal_term(q, e.ys, e.ls.back(), opt.zero_based, b);
  e.r = b.from_polynomial(ball_poly(e.xs, e.ks));

  std::vector<NodeRef> dist;
  for (std::size_t i = 0; i < a; ++i)
    dist.push_back(b.square(b.add({b.mul(k(1), b.var(e.xs[i])), b.neg(k(4 + i)), k(3)})));
  NodeRef scale = b.mul(b.square(k(1)), k(2));
  e.p = b.sub(b.mul(scale, b.sub(b.sub(b.constant(1), e.q), e.penalty)), b.mul(k(3), b.add(dist)));
  return e;
}

Engineered engineer(const ce::SemiOpenPtr& U, const universal::UniversalPtr& q,
                    const EngineerOptions& opt) {
  if (!U) throw std::invalid_argument("null set");
  const auto& sp = U->space();
  if (sp.factors.size() < 2) throw SpaceMismatch("set is not over R^a x N: " + sp.to_string());
  std::size_t a = sp.factors.size() - 1;
  if (!(sp == coding::SpaceCode::reals_times_nat(a)))
    throw SpaceMismatch("set is not over R^a x N: " + sp.to_string());
  Engineered e = engineer_symbolic(a, q, opt);
  e.U = U;
  return e;
}

}  // namespace polyforge::forge
