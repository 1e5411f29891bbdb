#pragma once

#include <memory>
#include <optional>

#include "polyforge/sphere/axis.hpp"

namespace polyforge::sphere {

// Picks, for a point x off D, a word w and a representative t of the
// orbit F x with x = g(w) t.
class TransversalOracle {
 public:
  virtual ~TransversalOracle() = default;
  struct Choice {
    Vec3 representative;
    GroupWord word;
  };
  virtual Choice choose(const Vec3& x) const = 0;
};

// Among g(f(i))^-1 x for i < budget, the lexicographically least vector.
// Deterministic, but not a transversal: points of one orbit can get
// different representatives when their searches see different windows.
class MockTransversal : public TransversalOracle {
 public:
  explicit MockTransversal(std::size_t budget = 256) : budget_(budget) {}
  Choice choose(const Vec3& x) const override;

 private:
  std::size_t budget_;
};

enum class Membership { Yes, Unknown };

struct DStarWitness {
  mpz_class alpha_power;
  mpz_class word_index;
  GroupWord word;
};

// Searches steps s < budget, s = cantor(n, i), for x = alpha^n times a
// fixed point of g(f(i)) (f(0) read as f(1)). Only n = 0 can be confirmed
// exactly for a rational point, so other steps never answer Yes.
std::optional<DStarWitness> d_star_witness(const Vec3& x, const mpz_class& budget);

struct PieceResult {
  Membership in_d_star = Membership::Unknown;
  std::optional<DStarWitness> witness;
  TransversalOracle::Choice choice;
  int a_index = 0;           // 1..4 from the chosen word
  std::optional<int> piece;  // 1..16 once D* membership is settled
};

// Piece 1 + 8 b1 + 2 (i - 1) + b2 with b1 = [x in D*], i the A-index of the
// transversal word and b2 = [alpha^-1 x in D*]. NotOnSphere when
// | |x|^2 - 1 | > tolerance.
PieceResult piece16_classify(const Vec3& x, const mpz_class& budget, const TransversalOracle& t,
                             const mpq_class& tolerance = 0);

}  // namespace polyforge::sphere
