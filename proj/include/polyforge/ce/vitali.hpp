#pragma once

#include <gmpxx.h>

#include "polyforge/ce/semi_open.hpp"

namespace polyforge::ce {

// The fixed enumeration of the rationals: with (i, j) the Cantor unpairing
// of m, q_m = z(i) / (j+1) where z(0), z(1), z(2), ... = 0, 1, -1, 2, -2, ...
mpq_class rational_enum(const mpz_class& m);
// Least m with q_m = q.
mpz_class rational_index(const mpq_class& q);

// Yes iff x - y = q_m for some m <= budget. OutOfRange unless x, y in [0,1].
Semi vitali_equiv_semidecide(const mpq_class& x, const mpq_class& y, const mpz_class& budget);

}  // namespace polyforge::ce
