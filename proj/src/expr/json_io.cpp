#include <functional>
#include <unordered_map>

#include <json.hpp>

#include "polyforge/error.hpp"
#include "polyforge/expr/emit.hpp"

namespace polyforge::expr {

using nlohmann::json;

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::Const: return "const";
    case Op::Var: return "var";
    case Op::Add: return "add";
    case Op::Mul: return "mul";
    case Op::Neg: return "neg";
    case Op::Pow: return "pow";
    case Op::SinPi: return "sinpi";
    case Op::Apply: return "apply";
  }
  return "?";
}

json dag_json(const NodeRef& root) {
  json nodes = json::array();
  std::unordered_map<const Node*, std::size_t> index;
  std::function<std::size_t(const NodeRef&)> go = [&](const NodeRef& n) -> std::size_t {
    auto it = index.find(n.get());
    if (it != index.end()) return it->second;
    std::vector<std::size_t> args;
    for (const auto& a : n->args) args.push_back(go(a));
    json j;
    j["op"] = op_name(n->op);
    if (n->op == Op::Const) j["value"] = n->value.get_str();
    if (n->op == Op::Var) j["name"] = n->name;
    if (n->op == Op::Pow) j["exp"] = n->value.get_str();
    if (n->op == Op::Apply) {
      if (n->fn->evaluation_only())
        throw EvaluationOnly(n->fn->name() + " has no symbolic form");
      j["fn"] = n->fn->name();
    }
    if (!args.empty()) j["args"] = args;
    nodes.push_back(std::move(j));
    index.emplace(n.get(), nodes.size() - 1);
    return nodes.size() - 1;
  };
  std::size_t r = go(root);
  return json{{"kind", "dag"}, {"nodes", nodes}, {"root", r}};
}

json poly_json(const Polynomial& p, const std::vector<std::string>& order) {
  json terms = json::array();
  for (const auto& [m, c] : canonical_terms(p, order)) {
    json mono = json::object();
    for (const auto& [v, e] : m.factors()) mono[v] = e;
    terms.push_back(json{{"c", c.get_str()}, {"m", mono}});
  }
  return json{{"kind", "poly"}, {"terms", terms}};
}

mpz_class big(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a decimal string");
  mpz_class z;
  if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError(std::string("bad integer in ") + what);
  return z;
}

NodeRef parse_dag(const json& m, const CallableResolver& resolve, DagBuilder& b) {
  const json& nodes = m.at("nodes");
  std::vector<NodeRef> built;
  for (const auto& j : nodes) {
    std::string op = j.at("op").get<std::string>();
    std::vector<NodeRef> args;
    if (j.contains("args")) {
      for (const auto& a : j.at("args")) {
        std::size_t i = a.get<std::size_t>();
        if (i >= built.size()) throw ParseError("forward node reference");
        args.push_back(built[i]);
      }
    }
    auto need = [&](std::size_t k) {
      if (args.size() != k) throw ParseError("wrong arity for " + op);
    };
    NodeRef n;
    if (op == "const") n = b.constant(big(j.at("value"), "value"));
    else if (op == "var") n = b.var(j.at("name").get<std::string>());
    else if (op == "add") n = b.add(std::move(args));
    else if (op == "mul") n = b.mul(std::move(args));
    else if (op == "neg") { need(1); n = b.neg(args[0]); }
    else if (op == "pow") { need(1); n = b.pow(args[0], big(j.at("exp"), "exp")); }
    else if (op == "sinpi") { need(1); n = b.sinpi(args[0]); }
    else if (op == "apply") {
      std::string name = j.at("fn").get<std::string>();
      auto fn = resolve ? resolve(name) : nullptr;
      if (!fn) throw ParseError("unknown function " + name);
      n = b.apply(fn, std::move(args));
    } else {
      throw ParseError("unknown op " + op);
    }
    built.push_back(n);
  }
  std::size_t root = m.at("root").get<std::size_t>();
  if (root >= built.size()) throw ParseError("root out of range");
  return built[root];
}

}  // namespace

std::string emit_json(const QuantifiedExpr& q) {
  json j;
  json prefix = json::array();
  for (const auto& blk : q.prefix())
    prefix.push_back(json{{"q", to_string(blk.q)}, {"dom", to_string(blk.dom)}, {"vars", blk.vars}});
  j["prefix"] = prefix;
  j["free"] = q.free();
  if (!q.params().empty()) j["params"] = q.params();
  j["matrix"] = q.is_dag() ? dag_json(std::get<NodeRef>(q.matrix()))
                           : poly_json(std::get<Polynomial>(q.matrix()), q.declaration_order());
  j["meta"] = json{{"degree", q.degree().to_string()}, {"var_count", q.arity().var_count}};
  return j.dump();
}

QuantifiedExpr parse_json(const std::string& text, const CallableResolver& resolve) {
  try {
    json j = json::parse(text);
    std::vector<QuantBlock> prefix;
    for (const auto& b : j.at("prefix")) {
      std::string q = b.at("q").get<std::string>();
      std::string d = b.at("dom").get<std::string>();
      QuantBlock blk;
      if (q == "inf") blk.q = Quantifier::Inf;
      else if (q == "sup") blk.q = Quantifier::Sup;
      else throw ParseError("bad quantifier " + q);
      if (d == "N") blk.dom = Domain::Nat;
      else if (d == "Z") blk.dom = Domain::Int;
      else if (d == "R") blk.dom = Domain::Real;
      else throw ParseError("bad domain " + d);
      blk.vars = b.at("vars").get<std::vector<std::string>>();
      prefix.push_back(std::move(blk));
    }
    auto free = j.at("free").get<std::vector<std::string>>();
    std::vector<std::string> params;
    if (j.contains("params")) params = j.at("params").get<std::vector<std::string>>();
    const json& m = j.at("matrix");
    std::string kind = m.at("kind").get<std::string>();
    Matrix matrix;
    if (kind == "poly") {
      Polynomial p;
      for (const auto& t : m.at("terms")) {
        std::vector<Monomial::Factor> fs;
        for (const auto& [v, e] : t.at("m").items()) fs.emplace_back(v, e.get<Exponent>());
        p += Polynomial::term(big(t.at("c"), "c"), Monomial(std::move(fs)));
      }
      matrix = std::move(p);
    } else if (kind == "dag") {
      DagBuilder b;
      matrix = parse_dag(m, resolve, b);
    } else {
      throw ParseError("bad matrix kind " + kind);
    }
    QuantifiedExpr q(std::move(prefix), std::move(free), std::move(matrix), std::move(params));
    if (j.contains("meta") && j["meta"].contains("degree") &&
        j["meta"]["degree"].get<std::string>() != q.degree().to_string())
      throw ParseError("meta.degree does not match the matrix");
    return q;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const MalformedExpression& e) {
    throw ParseError(e.what());
  }
}

}  // namespace polyforge::expr
