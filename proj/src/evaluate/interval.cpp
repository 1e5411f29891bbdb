#include "polyforge/evaluate/interval.hpp"

#include <algorithm>
#include <sstream>

#include "polyforge/evaluate/exact.hpp"

namespace polyforge::evaluate {

namespace {

mpq_class to_q(const __mpfr_struct* x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// floor of an exact rational
mpz_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const mpq_class& v, mpfr_prec_t prec) : Interval(v, v, prec) {}

Interval::Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) : Interval(prec) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval(o.prec_) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.prec_) {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) noexcept {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

mpq_class Interval::lo_q() const { return to_q(lo_); }
mpq_class Interval::hi_q() const { return to_q(hi_); }

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const __mpfr_struct* xs[2] = {a.lo_, a.hi_};
  const __mpfr_struct* ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto* x : xs)
    for (auto* y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw std::domain_error("division by an interval containing 0");
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const __mpfr_struct* xs[2] = {a.lo_, a.hi_};
  const __mpfr_struct* ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto* x : xs)
    for (auto* y : ys) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("square root of an interval reaching below 0");
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::root(unsigned long base, unsigned long k, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui(r.lo_, base, MPFR_RNDD);
  mpfr_set_ui(r.hi_, base, MPFR_RNDU);
  mpfr_rootn_ui(r.lo_, r.lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, r.hi_, k, MPFR_RNDU);
  return r;
}

Interval Interval::pow(unsigned long e) const {
  if (e == 0) return Interval(mpq_class(1), prec_);
  Interval r(prec_);
  if (e % 2 == 1 || mpfr_sgn(lo_) >= 0) {
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(hi_) <= 0) {
    mpfr_pow_ui(r.lo_, hi_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, lo_, e, MPFR_RNDU);
    return r;
  }
  mpfr_set_zero(r.lo_, 1);
  mpfr_t a, b;
  mpfr_init2(a, prec_);
  mpfr_init2(b, prec_);
  mpfr_pow_ui(a, lo_, e, MPFR_RNDU);
  mpfr_pow_ui(b, hi_, e, MPFR_RNDU);
  mpfr_max(r.hi_, a, b, MPFR_RNDU);
  mpfr_clear(a);
  mpfr_clear(b);
  return r;
}

Interval Interval::hull(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sinpi_at(const mpq_class& r, mpfr_prec_t prec) {
  if (auto v = sinpi_rational(r)) return Interval(*v, prec);
  // reduce to [0, 2) exactly
  mpq_class red = r - mpq_class(2 * floor_q(r / 2));
  mpfr_prec_t wp = prec + 32;
  mpfr_t x, pi, y;
  mpfr_inits2(wp, x, pi, y, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_q(x, red.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(x, x, pi, MPFR_RNDN);
  mpfr_sin(y, x, MPFR_RNDN);
  // |error| <= a few ulps of numbers below 2*pi: 2^(3 - wp) * 8 is ample
  mpfr_t eps;
  mpfr_init2(eps, 32);
  mpfr_set_ui_2exp(eps, 1, 6 - wp, MPFR_RNDU);
  Interval out(prec);
  mpfr_sub(out.lo_, y, eps, MPFR_RNDD);
  mpfr_add(out.hi_, y, eps, MPFR_RNDU);
  mpfr_clears(x, pi, y, eps, static_cast<mpfr_ptr>(nullptr));
  return out;
}

Interval Interval::sinpi() const {
  mpq_class a = lo_q(), b = hi_q();
  Interval out = sinpi_at(a, prec_);
  if (a == b) return out;
  out = out.hull(sinpi_at(b, prec_));
  // critical points k + 1/2 inside [a, b]
  mpz_class k = floor_q(a - mpq_class(1, 2)) + 1;
  for (int guard = 0; guard < 4 && mpq_class(k) + mpq_class(1, 2) <= b; ++guard, ++k) {
    mpq_class v = mpz_odd_p(k.get_mpz_t()) ? -1 : 1;
    out = out.hull(Interval(v, prec_));
  }
  mpfr_t one;
  mpfr_init2(one, 8);
  mpfr_set_si(one, 1, MPFR_RNDN);
  if (mpfr_greater_p(out.hi_, one)) mpfr_set(out.hi_, one, MPFR_RNDU);
  mpfr_neg(one, one, MPFR_RNDN);
  if (mpfr_less_p(out.lo_, one)) mpfr_set(out.lo_, one, MPFR_RNDD);
  mpfr_clear(one);
  return out;
}

std::string Interval::to_string() const {
  std::ostringstream os;
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "[%.17Rg, ", lo_);
  os << buf;
  mpfr_snprintf(buf, sizeof buf, "%.17Rg]", hi_);
  os << buf;
  return os.str();
}

}  // namespace polyforge::evaluate
