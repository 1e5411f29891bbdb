#include "polyforge/ce/vitali.hpp"

#include "polyforge/coding/pairing.hpp"
#include "polyforge/error.hpp"

namespace polyforge::ce {

mpq_class rational_enum(const mpz_class& m) {
  auto [i, j] = coding::cantor_unpair(m);
  mpz_class z = mpz_odd_p(i.get_mpz_t()) ? mpz_class((i + 1) / 2) : mpz_class(-(i / 2));
  mpq_class q(z, j + 1);
  q.canonicalize();
  return q;
}

mpz_class rational_index(const mpq_class& q) {
  const mpz_class& num = q.get_num();
  mpz_class i = num > 0 ? mpz_class(2 * num - 1) : mpz_class(-2 * num);
  // the reduced form minimizes both Cantor arguments
  return coding::cantor_pair(i, q.get_den() - 1);
}

Semi vitali_equiv_semidecide(const mpq_class& x, const mpq_class& y, const mpz_class& budget) {
  if (x < 0 || x > 1 || y < 0 || y > 1) throw OutOfRange("Vitali inputs must lie in [0,1]");
  return rational_index(x - y) <= budget ? Semi::Yes : Semi::Unknown;
}

}  // namespace polyforge::ce
