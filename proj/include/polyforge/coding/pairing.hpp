#pragma once

#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace polyforge::coding {

// J2(x, y) = (x+y)(x+y+1) + 2y: a bijection from pairs onto the even
// naturals, twice the classical Cantor pairing.
mpz_class pair2(const mpz_class& x, const mpz_class& y);
// NotInImage for odd v.
std::pair<mpz_class, mpz_class> unpair2(const mpz_class& v);

// J_{n+1}(x1..x_{n+1}) = J2(J_n(x1..xn), x_{n+1}); n >= 2.
mpz_class pairN(const std::vector<mpz_class>& xs);
std::vector<mpz_class> unpairN(const mpz_class& v, std::size_t n);

// The same without allocating: out.size() is the arity.
void pairN_into(std::span<const mpz_class> xs, mpz_class& out);
void unpairN_into(const mpz_class& v, std::span<mpz_class> out);

// Classical Cantor pairing (x+y)(x+y+1)/2 + y and its inverse; used by
// enumerations that need a bijection N -> N^2.
mpz_class cantor_pair(const mpz_class& x, const mpz_class& y);
std::pair<mpz_class, mpz_class> cantor_unpair(const mpz_class& c);

}  // namespace polyforge::coding
