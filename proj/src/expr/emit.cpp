#include "polyforge/expr/emit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace polyforge::expr {

std::string emit_json(const QuantifiedExpr& q);  // json_io.cpp

namespace {

// Large exponents such as 5^60 read better as powers.
bool as_power(const mpz_class& e, unsigned long& base, unsigned long& k) {
  if (e <= 1000000) return false;
  for (base = 2; base <= 10; ++base) {
    mpz_class x = e;
    k = 0;
    while (x > 1 && mpz_divisible_ui_p(x.get_mpz_t(), base)) {
      x /= base;
      ++k;
    }
    if (x == 1) return true;
  }
  return false;
}

std::string text_exponent(const mpz_class& e) {
  unsigned long b, k;
  if (as_power(e, b, k)) return "(" + std::to_string(b) + "^" + std::to_string(k) + ")";
  return e.get_str();
}

std::string latex_exponent(const mpz_class& e) {
  unsigned long b, k;
  if (as_power(e, b, k)) return std::to_string(b) + "^{" + std::to_string(k) + "}";
  return e.get_str();
}

constexpr int kSum = 1, kProd = 2, kUnary = 3, kPow = 4;

struct Renderer {
  bool latex;

  std::string var(const std::string& v) const { return latex ? latex_var(v) : v; }

  std::string wrap(const std::string& s, bool paren) const {
    if (!paren) return s;
    return latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
  }

  std::string node(const NodeRef& n, int ctx) const {
    switch (n->op) {
      case Op::Const: {
        std::string s = n->value.get_str();
        return wrap(s, n->value < 0 && ctx > kSum);
      }
      case Op::Var:
        return var(n->name);
      case Op::Add: {
        std::string s;
        bool first = true;
        for (const auto& a : n->args) {
          if (first) {
            s = node(a, kSum);
          } else if (a->op == Op::Neg) {
            s += " - " + node(a->args[0], kProd);
          } else if (a->op == Op::Const && a->value < 0) {
            mpz_class m = -a->value;
            s += " - " + m.get_str();
          } else {
            s += " + " + node(a, kSum);
          }
          first = false;
        }
        return wrap(s, ctx > kSum);
      }
      case Op::Mul: {
        std::string s;
        for (std::size_t i = 0; i < n->args.size(); ++i) {
          if (i > 0) s += latex ? " \\cdot " : "*";
          s += node(n->args[i], kUnary);
        }
        return wrap(s, ctx > kProd);
      }
      case Op::Neg:
        return wrap("-" + node(n->args[0], kUnary), ctx >= kUnary);
      case Op::Pow: {
        std::string b = node(n->args[0], kPow + 1);
        if (latex) return "{" + b + "}^{" + latex_exponent(n->value) + "}";
        return b + "^" + text_exponent(n->value);
      }
      case Op::SinPi:
        if (latex) return "\\sin\\left(\\pi " + node(n->args[0], kPow) + "\\right)";
        return "sin(pi*" + node(n->args[0], kUnary) + ")";
      case Op::Apply: {
        std::string s = latex ? "\\mathrm{" + n->fn->name() + "}\\left(" : n->fn->name() + "(";
        std::size_t u = n->fn->unknown_count();
        for (std::size_t i = 0; i < n->args.size(); ++i) {
          if (i > 0) s += (i == u) ? "; " : ", ";
          s += node(n->args[i], kSum);
        }
        return s + (latex ? "\\right)" : ")");
      }
    }
    return "?";
  }

  std::string poly(const Polynomial& p, const std::vector<std::string>& order) const {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : canonical_terms(p, order)) {
      mpz_class mag = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string body;
      for (const auto& [v, e] : m.factors()) {
        if (!body.empty()) body += latex ? " " : "*";
        body += var(v);
        if (e != 1) body += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
      }
      if (body.empty()) {
        s += mag.get_str();
      } else if (mag == 1) {
        s += body;
      } else {
        s += mag.get_str() + (latex ? " " : "*") + body;
      }
    }
    return s;
  }
};

std::string text_block(const QuantBlock& b, bool latex) {
  if (!latex) {
    std::string vars = compress_vars(b.vars);
    std::string dom = to_string(b.dom);
    if (b.vars.size() > 1) dom += "^" + std::to_string(b.vars.size());
    return to_string(b.q) + "_{" + vars + " in " + dom + "}";
  }
  std::string vars;
  if (b.vars.size() >= 3 && compress_vars(b.vars).find("..") != std::string::npos &&
      compress_vars(b.vars).find(',') == std::string::npos) {
    vars = latex_var(b.vars.front()) + ",\\dots," + latex_var(b.vars.back());
  } else {
    for (std::size_t i = 0; i < b.vars.size(); ++i)
      vars += (i ? "," : "") + latex_var(b.vars[i]);
  }
  std::string dom = b.dom == Domain::Nat ? "\\mathbb{N}" : b.dom == Domain::Int ? "\\mathbb{Z}" : "\\mathbb{R}";
  if (b.vars.size() > 1) dom += "^{" + std::to_string(b.vars.size()) + "}";
  return std::string(b.q == Quantifier::Inf ? "\\inf" : "\\sup") + "_{" + vars + " \\in " + dom + "}";
}

}  // namespace

std::vector<std::pair<Monomial, mpz_class>> canonical_terms(const Polynomial& p,
                                                            const std::vector<std::string>& order) {
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);
  std::vector<std::string> all(order);
  for (const auto& v : p.variables())
    if (!rank.count(v)) {
      rank.emplace(v, all.size());
      all.push_back(v);
    }
  std::vector<std::pair<Monomial, mpz_class>> terms(p.terms().begin(), p.terms().end());
  auto key = [&](const Monomial& m) {
    std::vector<Exponent> ev(all.size(), 0);
    for (const auto& [v, e] : m.factors()) ev[rank[v]] = e;
    return ev;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    auto da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da > db;
    return key(a.first) > key(b.first);
  });
  return terms;
}

std::string latex_var(const std::string& name) {
  std::size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  std::string stem = name.substr(0, i);
  std::string digits = name.substr(i);
  std::size_t us = stem.find('_');
  if (digits.empty() && us != std::string::npos && us + 1 < stem.size()) {
    digits = stem.substr(us + 1);
    stem = stem.substr(0, us);
  } else if (!stem.empty() && stem.back() == '_') {
    stem.pop_back();
  }
  if (stem == "l") stem = "\\ell";
  else if (stem.size() > 1) stem = "\\mathit{" + stem + "}";
  return digits.empty() ? stem : stem + "_{" + digits + "}";
}

std::string render_text(const Polynomial& p, const std::vector<std::string>& order) {
  return Renderer{false}.poly(p, order);
}
std::string render_text(const NodeRef& e) { return Renderer{false}.node(e, 0); }
std::string render_latex(const Polynomial& p, const std::vector<std::string>& order) {
  return Renderer{true}.poly(p, order);
}
std::string render_latex(const NodeRef& e) { return Renderer{true}.node(e, 0); }

std::string emit(const QuantifiedExpr& q, Format f) {
  if (f == Format::Json) return emit_json(q);
  bool latex = f == Format::LaTeX;
  Renderer r{latex};
  std::string matrix = q.is_dag() ? r.node(std::get<NodeRef>(q.matrix()), 0)
                                  : r.poly(std::get<Polynomial>(q.matrix()), q.declaration_order());
  std::ostringstream out;
  if (latex) out << "\\[ ";
  for (const auto& b : q.prefix()) out << text_block(b, latex) << ' ';
  if (latex) {
    out << "\\left[ " << matrix << " \\right] \\]";
  } else {
    out << "[ " << matrix << " ]";
  }
  return out.str();
}

}  // namespace polyforge::expr
