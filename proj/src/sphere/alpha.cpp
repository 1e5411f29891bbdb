#include "polyforge/sphere/alpha.hpp"

#include <algorithm>
#include <numeric>

#include "polyforge/error.hpp"

namespace polyforge::sphere {

namespace {

Interval zero(mpfr_prec_t p) { return Interval(p); }

}  // namespace

IMatrix3 imul(const IMatrix3& a, const IMatrix3& b) {
  mpfr_prec_t p = a[0][0].precision();
  IMatrix3 r{IVec3{zero(p), zero(p), zero(p)}, IVec3{zero(p), zero(p), zero(p)},
             IVec3{zero(p), zero(p), zero(p)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

IVec3 imul(const IMatrix3& a, const IVec3& v) {
  return {idot(a[0], v), idot(a[1], v), idot(a[2], v)};
}

IMatrix3 itranspose(const IMatrix3& a) {
  return {IVec3{a[0][0], a[1][0], a[2][0]}, IVec3{a[0][1], a[1][1], a[2][1]},
          IVec3{a[0][2], a[1][2], a[2][2]}};
}

Interval idet(const IMatrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Interval idot(const IVec3& a, const IVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

IMatrix3 to_interval(const RatMatrix3& m, mpfr_prec_t prec) {
  return {IVec3{Interval(m.m[0][0], prec), Interval(m.m[0][1], prec), Interval(m.m[0][2], prec)},
          IVec3{Interval(m.m[1][0], prec), Interval(m.m[1][1], prec), Interval(m.m[1][2], prec)},
          IVec3{Interval(m.m[2][0], prec), Interval(m.m[2][1], prec), Interval(m.m[2][2], prec)}};
}

IVec3 to_interval(const Vec3& v, mpfr_prec_t prec) {
  return {Interval(v[0], prec), Interval(v[1], prec), Interval(v[2], prec)};
}

mpq_class max_width(const IMatrix3& m) {
  mpq_class w = 0;
  for (const auto& row : m)
    for (const auto& e : row) w = std::max(w, e.width());
  return w;
}

IVec3 alpha_axis(mpfr_prec_t prec) {
  return {Interval(mpq_class(1), prec), Interval::root(2, 3, prec), Interval::root(2, 5, prec)};
}

namespace {

IMatrix3 alpha_at(mpfr_prec_t wp) {
  Interval a(mpq_class(1), wp), b(mpq_class(1), wp);
  Interval c = Interval::root(2, 3, wp), d = Interval::root(2, 5, wp);
  Interval two(mpq_class(2), wp);
  Interval aa = a * a, bb = b * b, cc = c.pow(2), dd = d.pow(2);
  Interval norm = aa + bb + cc + dd;
  IMatrix3 r{IVec3{aa + bb - cc - dd, two * (b * c - a * d), two * (b * d + a * c)},
             IVec3{two * (b * c + a * d), aa - bb + cc - dd, two * (c * d - a * b)},
             IVec3{two * (b * d - a * c), two * (c * d + a * b), aa - bb - cc + dd}};
  for (auto& row : r)
    for (auto& e : row) e = e / norm;
  return r;
}

}  // namespace

IMatrix3 alpha_matrix(mpfr_prec_t prec) {
  if (prec < 16) throw std::invalid_argument("precision must be at least 16 bits");
  mpq_class target(1);
  target /= mpq_class(mpz_class(1) << prec);
  for (mpfr_prec_t wp = prec + 16;; wp += 32) {
    IMatrix3 m = alpha_at(wp);
    if (max_width(m) <= target) return m;
    if (wp > 4 * prec + 256) throw RefinementExhausted("alpha enclosure did not tighten");
  }
}

IVec3 normalize(const IntVec3& v, mpfr_prec_t prec) {
  mpz_class n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (n2 == 0) throw std::invalid_argument("zero vector");
  Interval norm = Interval(mpq_class(n2), prec).sqrt();
  return {Interval(mpq_class(v[0]), prec) / norm, Interval(mpq_class(v[1]), prec) / norm,
          Interval(mpq_class(v[2]), prec) / norm};
}

SeparationCertificate separation_check(std::size_t K, mpfr_prec_t prec, mpfr_prec_t max_prec) {
  if (K < 2) throw std::invalid_argument("need at least two points");
  SeparationCertificate c;
  c.count = K;
  c.axes = distinct_axes(K);
  for (mpfr_prec_t p = prec; p <= max_prec; p *= 2) {
    IVec3 ax = alpha_axis(p);
    c.products.clear();
    for (const auto& e : c.axes) c.products.push_back(idot(normalize(e.axis, p), ax));
    std::vector<std::size_t> order(K);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return mpfr_less_p(c.products[i].lo(), c.products[j].lo()) != 0;
    });
    bool ok = true;
    for (std::size_t i = 0; i + 1 < K && ok; ++i)
      ok = c.products[order[i]].certainly_below(c.products[order[i + 1]]);
    if (ok) {
      c.precision = p;
      c.separated = true;
      return c;
    }
  }
  throw RefinementExhausted("inner products not separated at " + std::to_string(max_prec) + " bits");
}

}  // namespace polyforge::sphere
