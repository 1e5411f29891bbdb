#include <random>

#include "polyforge/error.hpp"
#include "polyforge/evaluate/engineered.hpp"

namespace polyforge::evaluate {

using K = ExtRealClass::Kind;

std::string to_string(TrichotomyRow::Outcome o) {
  switch (o) {
    case TrichotomyRow::Outcome::Agree: return "agree";
    case TrichotomyRow::Outcome::Disagree: return "disagree";
    case TrichotomyRow::Outcome::Skip: return "skip";
  }
  return "?";
}

TrichotomyReport verify_trichotomy(const forge::Engineered& g, const ce::SemiOpenSet& U,
                                   const std::vector<std::vector<mpq_class>>& samples,
                                   std::size_t n_max, const Budget& b) {
  if (!g.U || g.U.get() != &U) throw SpaceMismatch("engineered polynomial was built from another set");
  TrichotomyReport rep;
  for (const auto& x : samples) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      TrichotomyRow row{x, mpz_class(n), ExtRealClass::of(K::ValueZero), ExtRealClass::of(K::ValueZero),
                        TrichotomyRow::Outcome::Agree};
      bool skip = false;
      if (n == 0) {
        row.expected = ExtRealClass::of(K::ValueOne, 1);
      } else {
        coding::Point pt = coding::real_point(x);
        pt.emplace_back(mpq_class(static_cast<long>(n - 1)));
        if (ce::member_semidecide(U, pt, b.set_steps) == ce::Semi::Yes) {
          row.expected = ExtRealClass::of(K::ExceedsThreshold, b.threshold);
        } else {
          auto exact = U.contains_exact(pt);
          skip = !(exact && !*exact);
        }
      }
      row.got = engineered_sup(g, x, n, b).cls;
      if (skip) {
        row.outcome = TrichotomyRow::Outcome::Skip;
        ++rep.skips;
      } else if (row.got.kind == row.expected.kind) {
        ++rep.agreements;
      } else {
        row.outcome = TrichotomyRow::Outcome::Disagree;
        ++rep.disagreements;
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::vector<std::vector<mpq_class>> grid_samples(std::size_t count, std::size_t a, std::uint64_t seed,
                                                 long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den_pick(0, 2);
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<mpq_class> x;
    for (std::size_t j = 0; j < a; ++j) {
      long q = 1L << den_pick(rng);
      std::uniform_int_distribution<long> num(-bound * q, bound * q);
      mpq_class v(num(rng), q);
      v.canonicalize();
      x.push_back(v);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace polyforge::evaluate
