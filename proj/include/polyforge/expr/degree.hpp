#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace polyforge::expr {

// Total degree of an expression: a natural number or minus infinity (the
// zero polynomial).
class Degree {
 public:
  Degree() = default;  // 0
  explicit Degree(mpz_class v);
  explicit Degree(long v) : Degree(mpz_class(v)) {}

  static Degree minus_infinity();

  bool is_minus_infinity() const { return minus_inf_; }
  const mpz_class& value() const;
  std::string to_string() const;

  friend Degree operator+(const Degree& a, const Degree& b);
  Degree times(const mpz_class& k) const;

  friend bool operator==(const Degree& a, const Degree& b);
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);

 private:
  bool minus_inf_ = false;
  mpz_class v_ = 0;
};

Degree max(const Degree& a, const Degree& b);

}  // namespace polyforge::expr
