#include "polyforge/forge/ball.hpp"

#include <stdexcept>

namespace polyforge::forge {

using expr::Polynomial;

std::vector<std::string> default_reals(std::size_t a) {
  if (a == 1) return {"x"};
  return numbered("x", a);
}

std::vector<std::string> numbered(const std::string& stem, std::size_t count, std::size_t first) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

Polynomial ball_poly(std::size_t a) { return ball_poly(default_reals(a), numbered("k", a + 3)); }

Polynomial ball_poly(const std::vector<std::string>& xs, const std::vector<std::string>& ks) {
  if (xs.empty()) throw std::invalid_argument("ball polynomial needs a >= 1");
  if (ks.size() != xs.size() + 3) throw std::invalid_argument("ball polynomial needs a+3 k's");
  auto k = [&](std::size_t i) { return Polynomial::variable(ks[i - 1]); };
  Polynomial sum;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial t = k(1) * Polynomial::variable(xs[i]) - k(4 + i) + k(3);
    sum += t * t;
  }
  return k(1) * k(1) * k(2) - k(3) * sum;
}

Ball ball_of(const std::vector<mpz_class>& k, std::size_t a) {
  if (k.size() != a + 3 || k[0] <= 0 || k[2] <= 0)
    throw std::invalid_argument("ball_of needs a+3 entries with k1, k3 > 0");
  Ball b;
  for (std::size_t i = 0; i < a; ++i) {
    mpq_class c(k[3 + i] - k[2], k[0]);
    c.canonicalize();
    b.center.push_back(c);
  }
  b.radius2 = mpq_class(k[1], k[2]);
  b.radius2.canonicalize();
  return b;
}

bool in_ball(const Ball& b, const std::vector<mpq_class>& x) {
  mpq_class d2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpq_class d = x[i] - b.center[i];
    d2 += d * d;
  }
  return d2 <= b.radius2;
}

Polynomial pair2_poly(const Polynomial& u, const Polynomial& v) {
  Polynomial s = u + v;
  return s * (s + Polynomial(1)) + Polynomial(2) * v;
}

Polynomial pairN_poly(const std::vector<Polynomial>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("pairing needs two arguments");
  Polynomial p = pair2_poly(xs[0], xs[1]);
  for (std::size_t i = 2; i < xs.size(); ++i) p = pair2_poly(p, xs[i]);
  return p;
}

expr::NodeRef pair2_dag(const expr::NodeRef& u, const expr::NodeRef& v, expr::DagBuilder& b) {
  auto s = b.add(u, v);
  return b.add(b.mul(s, b.add(s, b.constant(1))), b.mul(b.constant(2), v));
}

expr::NodeRef pairN_dag(const std::vector<expr::NodeRef>& xs, expr::DagBuilder& b) {
  if (xs.size() < 2) throw std::invalid_argument("pairing needs two arguments");
  auto p = pair2_dag(xs[0], xs[1], b);
  for (std::size_t i = 2; i < xs.size(); ++i) p = pair2_dag(p, xs[i], b);
  return p;
}

}  // namespace polyforge::forge
