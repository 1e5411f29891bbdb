#pragma once

#include <array>
#include <string>

#include "polyforge/expr/quantified.hpp"

namespace polyforge::forge {

// Each natural block variable v becomes v_1..v_4 over Z, with v replaced by
// v_1^2 + v_2^2 + v_3^2 + v_4^2 in the matrix.
expr::QuantifiedExpr foursquare_transform(const expr::QuantifiedExpr& e);

// Replaces a trailing pair inf_{y in Z} sup_{z in Z^k} g by
//   inf_{y in R} sup_{beta in R, z in R^k} inf_{gamma in R}
//     [g + beta^2 sum sin^2(pi y_i) - gamma^2 sum sin^2(pi z_j)].
// ShapeMismatch unless the last two blocks are inf over Z then sup over Z.
expr::QuantifiedExpr trig_relaxation(const expr::QuantifiedExpr& e);

// The four-square decomposition of n found by search (Lagrange).
std::array<mpz_class, 4> four_squares(const mpz_class& n);

}  // namespace polyforge::forge
