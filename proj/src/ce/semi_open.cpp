#include "polyforge/ce/semi_open.hpp"

#include "polyforge/error.hpp"

namespace polyforge::ce {

Semi member_semidecide(const SemiOpenSet& s, const coding::Point& x, const mpz_class& budget) {
  if (x.size() != s.space().size())
    throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, space " +
                            s.space().to_string());
  for (mpz_class step = 0; step < budget; ++step) {
    auto c = s.emit(step);
    if (c && coding::nbhd_member(x, *c)) return Semi::Yes;
  }
  return Semi::Unknown;
}

Pi02Spec::Pi02Spec(SemiOpenPtr u, std::size_t ambient) : U(std::move(u)), a(ambient) {
  if (!U) throw std::invalid_argument("null semi-open set");
  if (!(U->space() == coding::SpaceCode::reals_times_nat(a)))
    throw SpaceMismatch("expected R^" + std::to_string(a) + "xN, got " + U->space().to_string());
}

SectionReport pi02_sections(const Pi02Spec& spec, const std::vector<mpq_class>& x,
                            std::size_t n_max, const mpz_class& budget) {
  if (x.size() != spec.a) throw DimensionMismatch("point dimension differs from ambient");
  for (std::size_t n = 0; n <= n_max; ++n) {
    coding::Point p = coding::real_point(x);
    p.emplace_back(mpq_class(n));
    if (member_semidecide(*spec.U, p, budget) != Semi::Yes) return {false, n};
  }
  return {true, std::nullopt};
}

}  // namespace polyforge::ce
