#include "polyforge/ce/ce_set.hpp"

namespace polyforge::ce {

std::optional<mpz_class> CeSet::first_step(const mpz_class& v, const mpz_class& budget) const {
  for (mpz_class s = 0; s < budget; ++s) {
    auto e = emit(s);
    if (e && *e == v) return s;
  }
  return std::nullopt;
}

std::optional<mpz_class> FunctionCeSet::first_step(const mpz_class& v,
                                                   const mpz_class& budget) const {
  if (!locate_) return CeSet::first_step(v, budget);
  auto s = locate_(v);
  if (s && *s < budget) return s;
  return std::nullopt;
}

CeSetPtr evens() {
  return std::make_shared<FunctionCeSet>(
      "evens", [](const mpz_class& s) -> std::optional<mpz_class> { return 2 * s; },
      [](const mpz_class& v) -> std::optional<mpz_class> {
        if (v < 0 || mpz_odd_p(v.get_mpz_t())) return std::nullopt;
        return v / 2;
      });
}

CeSetPtr empty_ce_set() {
  return std::make_shared<FunctionCeSet>(
      "empty", [](const mpz_class&) -> std::optional<mpz_class> { return std::nullopt; },
      [](const mpz_class&) -> std::optional<mpz_class> { return std::nullopt; });
}

}  // namespace polyforge::ce
