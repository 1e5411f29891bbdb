#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polyforge/expr/degree.hpp"

namespace polyforge::expr {

using Exponent = std::uint32_t;

// Power product of named variables; factors sorted by name, exponents > 0.
class Monomial {
 public:
  using Factor = std::pair<std::string, Exponent>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(const std::string& name, Exponent e = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint64_t total_degree() const;
  Exponent exponent_of(const std::string& name) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class>;

  Polynomial() = default;  // zero
  Polynomial(long c);      // NOLINT: constants convert implicitly
  Polynomial(const mpz_class& c);  // NOLINT
  static Polynomial variable(const std::string& name);
  static Polynomial term(const mpz_class& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Degree degree() const;
  std::set<std::string> variables() const;
  mpz_class coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(Exponent e) const;

  // Simultaneous substitution. Every key must occur in the polynomial when
  // strict is set; UnknownVariable otherwise.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings,
                        bool strict = true) const;
  Polynomial rename(const std::map<std::string, std::string>& names) const;

  // Exact value; UnboundVariable when a variable is missing.
  mpq_class evaluate(const std::map<std::string, mpq_class>& at) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  TermMap terms_;
};

}  // namespace polyforge::expr
