#pragma once

#include <gmpxx.h>

namespace polyforge::coding {

// Largest e with p^e | n. ZeroArgument for n = 0.
unsigned long padic_valuation(unsigned long p, const mpz_class& n);

// p_0 = 2, p_1 = 3, p_2 = 5, ...
unsigned long nth_prime(std::size_t i);

}  // namespace polyforge::coding
