#include "polyforge/sphere/classify.hpp"

#include "polyforge/coding/pairing.hpp"
#include "polyforge/error.hpp"

namespace polyforge::sphere {

TransversalOracle::Choice MockTransversal::choose(const Vec3& x) const {
  Choice best{x, GroupWord()};
  for (std::size_t i = 1; i < budget_; ++i) {
    GroupWord w = enum_word(i);
    Vec3 y = word_to_matrix(w.inverse()) * x;
    if (y < best.representative) best = {y, w};
  }
  return best;
}

std::optional<DStarWitness> d_star_witness(const Vec3& x, const mpz_class& budget) {
  for (mpz_class s = 0; s < budget; ++s) {
    auto [n, i] = coding::cantor_unpair(s);
    if (n != 0) continue;
    GroupWord w = enum_word(i == 0 ? mpz_class(1) : i);
    if (w.is_identity()) continue;
    if (same_axis(x, to_rational(fixed_axis(w)))) return DStarWitness{n, i, w};
  }
  return std::nullopt;
}

PieceResult piece16_classify(const Vec3& x, const mpz_class& budget, const TransversalOracle& t,
                             const mpq_class& tolerance) {
  mpq_class n2 = dot(x, x);
  if (abs(n2 - 1) > tolerance) throw NotOnSphere("|x|^2 = " + n2.get_str());
  PieceResult r;
  r.witness = d_star_witness(x, budget);
  r.choice = t.choose(x);
  r.a_index = classify_piece(r.choice.word);
  if (r.witness) {
    r.in_d_star = Membership::Yes;
    // the alpha^n D are disjoint, so alpha^-1 x is in D* iff n > 0
    int b2 = r.witness->alpha_power > 0 ? 1 : 0;
    r.piece = 1 + 8 + 2 * (r.a_index - 1) + b2;
  }
  return r;
}

}  // namespace polyforge::sphere
