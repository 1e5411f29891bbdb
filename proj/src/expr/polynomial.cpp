#include "polyforge/expr/polynomial.hpp"

#include <algorithm>

#include "polyforge/error.hpp"

namespace polyforge::expr {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

Monomial Monomial::variable(const std::string& name, Exponent e) {
  return Monomial({{name, e}});
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Exponent Monomial::exponent_of(const std::string& name) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), name,
                             [](const Factor& f, const std::string& n) { return f.first < n; });
  return (it != factors_.end() && it->first == name) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      std::uint64_t e = std::uint64_t(i->second) + j->second;
      if (e > UINT32_MAX) throw BudgetExceeded("monomial exponent exceeds 2^32");
      r.factors_.emplace_back(i->first, Exponent(e));
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial::Polynomial(long c) : Polynomial(mpz_class(c)) {}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(const std::string& name) {
  return term(1, Monomial::variable(name));
}

Polynomial Polynomial::term(const mpz_class& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return Degree(mpz_class(std::to_string(d)));
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vs.insert(f.first);
  return vs;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(Exponent e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings,
                                  bool strict) const {
  if (strict) {
    auto vs = variables();
    for (const auto& [name, p] : bindings)
      if (!vs.count(name)) throw UnknownVariable(name);
  }
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Polynomial t(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        kept.emplace_back(v, e);
      } else {
        t *= it->second.pow(e);
      }
    }
    r += t * term(1, Monomial(std::move(kept)));
  }
  return r;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string>& names) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : m.factors()) {
      auto it = names.find(v);
      fs.emplace_back(it == names.end() ? v : it->second, e);
    }
    r.add_term(Monomial(std::move(fs)), c);
  }
  return r;
}

mpq_class Polynomial::evaluate(const std::map<std::string, mpq_class>& at) const {
  mpq_class sum = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = at.find(v);
      if (it == at.end()) throw UnboundVariable(v);
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      t *= p;
    }
    sum += t;
  }
  return sum;
}

}  // namespace polyforge::expr
