#include "polyforge/universal/universal.hpp"

#include <mutex>

#include "polyforge/error.hpp"

namespace polyforge::universal {

mpz_class default_oracle_budget() {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), 10, 30);
  return b;
}

std::shared_ptr<const UniversalPoly> UniversalPoly::symbolic(std::string name, expr::NodeRef body,
                                                             std::vector<std::string> unknowns,
                                                             std::string argument,
                                                             std::vector<std::string> params) {
  std::shared_ptr<UniversalPoly> u(new UniversalPoly());
  u->kind_ = Kind::Symbolic;
  u->name_ = std::move(name);
  u->delta_ = expr::degree(body);
  u->body_ = std::move(body);
  u->unknowns_ = std::move(unknowns);
  u->argument_ = std::move(argument);
  u->params_ = std::move(params);
  auto vs = expr::variables(u->body_);
  std::set<std::string> declared(u->unknowns_.begin(), u->unknowns_.end());
  declared.insert(u->argument_);
  declared.insert(u->params_.begin(), u->params_.end());
  for (const auto& v : vs)
    if (!declared.count(v)) throw MalformedExpression("undeclared variable in universal body: " + v);
  return u;
}

std::shared_ptr<const UniversalPoly> UniversalPoly::metadata_only(std::string name, std::size_t nu,
                                                                  mpz_class delta,
                                                                  std::vector<std::string> params) {
  std::shared_ptr<UniversalPoly> u(new UniversalPoly());
  u->kind_ = Kind::MetadataOnly;
  u->name_ = std::move(name);
  u->delta_ = expr::Degree(std::move(delta));
  for (std::size_t i = 1; i <= nu; ++i) u->unknowns_.push_back("x" + std::to_string(i));
  u->argument_ = "n";
  u->params_ = std::move(params);
  return u;
}

std::shared_ptr<const UniversalPoly> UniversalPoly::virtual_oracle(ce::CeSetPtr w, mpz_class budget) {
  if (!w) throw std::invalid_argument("null oracle");
  std::shared_ptr<UniversalPoly> u(new UniversalPoly());
  u->kind_ = Kind::Virtual;
  u->name_ = "oracle:" + w->name();
  u->delta_ = expr::Degree();
  u->argument_ = "l";
  u->oracle_ = std::move(w);
  u->budget_ = std::move(budget);
  return u;
}

bool UniversalPoly::solvable(const mpz_class& l) const {
  if (kind_ != Kind::Virtual) throw EvaluationOnly(name_ + " has no membership oracle");
  if (l < 0) return false;
  return oracle_->member(l, budget_);
}

mpq_class UniversalPoly::call(const std::vector<mpq_class>& args) const {
  if (kind_ != Kind::Virtual)
    throw EvaluationOnly(name_ + " cannot be evaluated: its parameters are symbolic");
  if (args.size() != 1) throw std::invalid_argument("oracle universal takes one argument");
  const mpq_class& l = args[0];
  if (l.get_den() != 1) return 1;
  return solvable(l.get_num()) ? 0 : 1;
}

const std::vector<JonesRecord>& jones_meta() {
  static const std::vector<JonesRecord> meta = [] {
    mpz_class p60, p58;
    mpz_ui_pow_ui(p60.get_mpz_t(), 5, 60);
    mpz_ui_pow_ui(p58.get_mpz_t(), 5, 58);
    return std::vector<JonesRecord>{{58, 4}, {28, 2 * p60}, {9, 47216 * p58 + 9728}};
  }();
  return meta;
}

UniversalPtr jones58() {
  static const UniversalPtr u = UniversalPoly::metadata_only("jones58", 58, jones_meta()[0].degree, {});
  return u;
}

UniversalPtr jones9() {
  static const UniversalPtr u = UniversalPoly::metadata_only("jones9", 9, jones_meta()[2].degree, {});
  return u;
}

UniversalPtr jones28() {
  static const UniversalPtr u = [] {
    std::vector<std::string> xs;
    for (int i = 1; i <= 28; ++i) xs.push_back("x" + std::to_string(i));
    auto p = UniversalPoly::symbolic("jones28", jones_figure1(), xs, "n", {"m1", "m2", "m3"});
    if (!(p->delta() == expr::Degree(jones_meta()[1].degree)))
      throw std::logic_error("Figure 1 degree does not match its metadata");
    return p;
  }();
  return u;
}

UniversalPtr oracle_universal(ce::CeSetPtr w, mpz_class budget) {
  return UniversalPoly::virtual_oracle(std::move(w), std::move(budget));
}

expr::NodeRef shift_one_based(const expr::NodeRef& e, const std::vector<std::string>& vars,
                              expr::DagBuilder& b) {
  std::map<std::string, expr::NodeRef> bind;
  for (const auto& v : vars) bind.emplace(v, b.add(b.var(v), b.constant(1)));
  return expr::substitute(e, bind, b, true);
}

std::shared_ptr<const expr::Callable> resolve_universal(const std::string& name) {
  if (name == "jones58") return jones58();
  if (name == "jones9") return jones9();
  if (name == "jones28") return jones28();
  return nullptr;
}

}  // namespace polyforge::universal
