#pragma once

#include <map>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "polyforge/expr/dag.hpp"

namespace polyforge::evaluate {

// A closed interval [lo, hi] with MPFR endpoints rounded outward.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const mpq_class& v, mpfr_prec_t prec);
  Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return prec_; }
  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }
  mpq_class lo_q() const;
  mpq_class hi_q() const;
  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  mpq_class width() const { return hi_q() - lo_q(); }

  bool contains(const mpq_class& v) const;
  // o lies inside this interval
  bool contains(const Interval& o) const;
  bool certainly_below(const Interval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  // std::domain_error when b contains 0
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval sqrt() const;
  // the real k-th root of a natural
  static Interval root(unsigned long base, unsigned long k, mpfr_prec_t prec);
  bool overlaps(const Interval& o) const {
    return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
  }
  Interval pow(unsigned long e) const;
  // sin(pi x)
  Interval sinpi() const;
  // sin(pi r) at an exact rational, width at most 2^-prec
  static Interval sinpi_at(const mpq_class& r, mpfr_prec_t prec);
  // smallest interval containing both
  Interval hull(const Interval& o) const;

  std::string to_string() const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

using IntervalBox = std::map<std::string, Interval>;

// Outward-rounded enclosure of e over the box. Applications are enclosed
// only when their arguments are exact points.
Interval interval_eval(const expr::NodeRef& e, const IntervalBox& box, mpfr_prec_t prec = 128);

}  // namespace polyforge::evaluate
