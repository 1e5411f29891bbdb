#include "polyforge/expr/quantified.hpp"

#include <cctype>
#include <set>

#include "polyforge/error.hpp"

namespace polyforge::expr {

QuantifiedExpr::QuantifiedExpr(std::vector<QuantBlock> prefix, std::vector<std::string> free,
                               Matrix matrix, std::vector<std::string> params)
    : prefix_(std::move(prefix)),
      free_(std::move(free)),
      params_(std::move(params)),
      matrix_(std::move(matrix)) {
  if (is_dag() && !std::get<NodeRef>(matrix_)) throw MalformedExpression("null matrix");
  std::set<std::string> declared;
  auto declare = [&](const std::string& v) {
    if (v.empty()) throw MalformedExpression("empty variable name");
    if (!declared.insert(v).second) throw MalformedExpression("variable declared twice: " + v);
  };
  for (const auto& v : free_) declare(v);
  for (const auto& blk : prefix_) {
    if (blk.vars.empty()) throw MalformedExpression("empty quantifier block");
    for (const auto& v : blk.vars) declare(v);
  }
  for (const auto& v : params_) declare(v);
  for (const auto& v : matrix_variables())
    if (!declared.count(v)) throw MalformedExpression("undeclared matrix variable: " + v);
}

std::vector<std::string> QuantifiedExpr::declaration_order() const {
  std::vector<std::string> out = free_;
  for (const auto& blk : prefix_) out.insert(out.end(), blk.vars.begin(), blk.vars.end());
  out.insert(out.end(), params_.begin(), params_.end());
  return out;
}

std::set<std::string> QuantifiedExpr::matrix_variables() const {
  if (is_dag()) return variables(std::get<NodeRef>(matrix_));
  return std::get<Polynomial>(matrix_).variables();
}

Degree QuantifiedExpr::degree() const {
  if (is_dag()) return expr::degree(std::get<NodeRef>(matrix_));
  return std::get<Polynomial>(matrix_).degree();
}

ArityReport QuantifiedExpr::arity() const {
  ArityReport r;
  r.free_count = free_.size();
  r.var_count = free_.size();
  std::string sig;
  for (const auto& blk : prefix_) {
    r.block_sizes.push_back(blk.vars.size());
    r.var_count += blk.vars.size();
    if (!sig.empty()) sig += ' ';
    sig += to_string(blk.q) + "_" + to_string(blk.dom) + "(" + compress_vars(blk.vars) + ")";
  }
  r.degree = degree();
  r.signature = sig;
  return r;
}

bool operator==(const QuantifiedExpr& a, const QuantifiedExpr& b) {
  if (a.prefix_ != b.prefix_ || a.free_ != b.free_ || a.params_ != b.params_) return false;
  if (a.is_dag() != b.is_dag()) return false;
  if (a.is_dag())
    return structurally_equal(std::get<NodeRef>(a.matrix_), std::get<NodeRef>(b.matrix_));
  return std::get<Polynomial>(a.matrix_) == std::get<Polynomial>(b.matrix_);
}

std::string to_string(Quantifier q) { return q == Quantifier::Inf ? "inf" : "sup"; }

std::string to_string(Domain d) {
  switch (d) {
    case Domain::Nat: return "N";
    case Domain::Int: return "Z";
    case Domain::Real: return "R";
  }
  return "?";
}

namespace {

bool split_numbered(const std::string& v, std::string& stem, long& idx) {
  std::size_t i = v.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(v[i - 1]))) --i;
  if (i == 0 || i == v.size() || v[i] == '0' || v.size() - i > 9) return false;
  stem = v.substr(0, i);
  idx = std::stol(v.substr(i));
  return true;
}

}  // namespace

std::string compress_vars(const std::vector<std::string>& vars) {
  std::string out;
  std::size_t i = 0;
  while (i < vars.size()) {
    std::string stem;
    long idx = 0;
    std::size_t j = i + 1;
    if (split_numbered(vars[i], stem, idx)) {
      std::string s2;
      long k2 = 0;
      while (j < vars.size() && split_numbered(vars[j], s2, k2) && s2 == stem &&
             k2 == idx + long(j - i))
        ++j;
    }
    if (!out.empty()) out += ",";
    if (j - i >= 3) {
      out += vars[i] + ".." + vars[j - 1];
    } else {
      j = i + 1;
      out += vars[i];
    }
    i = j;
  }
  return out;
}

}  // namespace polyforge::expr
