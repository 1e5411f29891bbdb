#include "polyforge/coding/valuation.hpp"

#include <mutex>
#include <vector>

#include "polyforge/error.hpp"

namespace polyforge::coding {

unsigned long padic_valuation(unsigned long p, const mpz_class& n) {
  if (n == 0) throw ZeroArgument("valuation of 0");
  if (p < 2) throw std::invalid_argument("valuation base must be prime");
  if (p == 2) return mpz_scan1(n.get_mpz_t(), 0);
  mpz_class x = abs(n);
  mpz_class pz = p;
  return mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
}

unsigned long nth_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<unsigned long> primes{2};
  std::lock_guard<std::mutex> lock(mu);
  for (unsigned long c = primes.back() + 1; primes.size() <= i; ++c) {
    bool prime = true;
    for (unsigned long q : primes) {
      if (q * q > c) break;
      if (c % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes[i];
}

}  // namespace polyforge::coding
