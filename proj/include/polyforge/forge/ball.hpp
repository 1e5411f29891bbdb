#pragma once

#include <string>
#include <vector>

#include "polyforge/expr/dag.hpp"
#include "polyforge/expr/polynomial.hpp"

namespace polyforge::forge {

// Default names: "x" when a = 1, else x1..xa.
std::vector<std::string> default_reals(std::size_t a);
std::vector<std::string> numbered(const std::string& stem, std::size_t count, std::size_t first = 1);

// r(x, k) = k1^2 k2 - k3 * sum_i (k1 x_i - k_{3+i} + k3)^2. For k1, k3 > 0,
// {r >= 0} is the closed ball with center ((k_{3+i} - k3)/k1)_i and squared
// radius k2/k3.
expr::Polynomial ball_poly(std::size_t a);
expr::Polynomial ball_poly(const std::vector<std::string>& xs, const std::vector<std::string>& ks);

struct Ball {
  std::vector<mpq_class> center;
  mpq_class radius2;
};
// Requires k1, k3 > 0.
Ball ball_of(const std::vector<mpz_class>& k, std::size_t a);
// Closed-ball membership computed from center and radius, not from r.
bool in_ball(const Ball& b, const std::vector<mpq_class>& x);

// J2(u, v) = (u+v)(u+v+1) + 2v and its left-nested iterates.
expr::Polynomial pair2_poly(const expr::Polynomial& u, const expr::Polynomial& v);
expr::Polynomial pairN_poly(const std::vector<expr::Polynomial>& xs);
expr::NodeRef pair2_dag(const expr::NodeRef& u, const expr::NodeRef& v, expr::DagBuilder& b);
expr::NodeRef pairN_dag(const std::vector<expr::NodeRef>& xs, expr::DagBuilder& b);

}  // namespace polyforge::forge
