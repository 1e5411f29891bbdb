#pragma once

#include <vector>

#include "polyforge/ce/ce_set.hpp"
#include "polyforge/ce/semi_open.hpp"

namespace polyforge::ce {

// Position of a tuple in the order: by total weight, then
// lexicographically. A bijection N^d -> N.
mpz_class graded_rank(const std::vector<mpz_class>& x);
std::vector<mpz_class> graded_unrank(const mpz_class& t, std::size_t d);

// Codes J_{4+a}(n, k1..k_{3+a}) such that
//   (i)   n = 0, k1 = k2 = 1, k3 = 0;
//   (ii)  n > 0, k1 = k3 = 0;
//   (iii) n, k1, k3 > 0 and the closed ball with center
//         ((k4-k3)/k1, ..., (k_{3+a}-k3)/k1) and squared radius k2/k3,
//         placed in section n-1, lies inside some neighborhood of U.
// Step t enumerates the tuple (n, k, s) of rank t; s is the U-step used by
// (iii), and (i)/(ii) codes are emitted at s = 0.
class W1Set : public CeSet {
 public:
  enum class Condition { None, I, II, III };

  W1Set(SemiOpenPtr U, std::size_t a);

  std::string name() const override;
  std::optional<mpz_class> emit(const mpz_class& step) const override;
  std::optional<mpz_class> first_step(const mpz_class& v, const mpz_class& budget) const override;

  std::size_t ambient() const { return a_; }
  std::size_t k_count() const { return a_ + 3; }
  const SemiOpenSet& U() const { return *U_; }

  // Which condition the shape of (n, k) can satisfy; III still needs a ball
  // check against some U-step.
  static Condition shape(const mpz_class& n, const std::vector<mpz_class>& k);
  // Does the ball of (n, k) fit in the neighborhood U emits at step s?
  bool ball_fits(const mpz_class& n, const std::vector<mpz_class>& k, const mpz_class& s) const;
  mpz_class code(const mpz_class& n, const std::vector<mpz_class>& k) const;
  // Rank of (n, k, s) in the dovetail.
  mpz_class rank(const mpz_class& n, const std::vector<mpz_class>& k, const mpz_class& s) const;

 private:
  SemiOpenPtr U_;
  std::size_t a_;
};

std::shared_ptr<const W1Set> build_W1(SemiOpenPtr U, std::size_t a);

}  // namespace polyforge::ce
