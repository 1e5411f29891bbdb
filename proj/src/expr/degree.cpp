#include "polyforge/expr/degree.hpp"

#include <stdexcept>

namespace polyforge::expr {

Degree::Degree(mpz_class v) : v_(std::move(v)) {
  if (v_ < 0) throw std::invalid_argument("negative degree");
}

Degree Degree::minus_infinity() {
  Degree d;
  d.minus_inf_ = true;
  return d;
}

const mpz_class& Degree::value() const {
  if (minus_inf_) throw std::logic_error("degree of the zero expression has no value");
  return v_;
}

std::string Degree::to_string() const { return minus_inf_ ? "-inf" : v_.get_str(); }

Degree operator+(const Degree& a, const Degree& b) {
  if (a.minus_inf_ || b.minus_inf_) return Degree::minus_infinity();
  return Degree(a.v_ + b.v_);
}

Degree Degree::times(const mpz_class& k) const {
  // deg(e^0) = 0 even for e = 0, since 0^0 = 1
  if (k == 0) return Degree();
  if (minus_inf_) return *this;
  return Degree(v_ * k);
}

bool operator==(const Degree& a, const Degree& b) {
  if (a.minus_inf_ || b.minus_inf_) return a.minus_inf_ == b.minus_inf_;
  return a.v_ == b.v_;
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
  if (a.minus_inf_ && b.minus_inf_) return std::strong_ordering::equal;
  if (a.minus_inf_) return std::strong_ordering::less;
  if (b.minus_inf_) return std::strong_ordering::greater;
  int c = cmp(a.v_, b.v_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Degree max(const Degree& a, const Degree& b) { return a < b ? b : a; }

}  // namespace polyforge::expr
