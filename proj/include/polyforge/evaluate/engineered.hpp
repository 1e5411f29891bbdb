#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyforge/evaluate/search.hpp"
#include "polyforge/forge/engineer.hpp"

namespace polyforge::evaluate {

// sup over (y, l, k) of an engineered p built on an oracle universal,
// evaluated through the case structure of p: off the correct l-chain, or
// when the oracle rejects, p <= 0; otherwise p = r(x, k). Witnesses k are
// searched over (k1, k3) in [1, natBound]^2 with k_{3+i} the integer
// nearest k1 x_i + k3 and k2 the largest value keeping the ball inside a
// neighborhood U emits within set_steps. Every reported value is an exact
// evaluation of p itself with the oracle deciding q.
struct EngineeredVerdict {
  ExtRealClass cls;
  mpq_class best;                    // at natBound, unamplified
  std::vector<mpz_class> witness;    // k achieving best (empty if none)
  mpz_class t = 1;                   // amplification factor used
  std::optional<mpq_class> amplified;  // p at t * witness
  bool growth_in_t = true;             // p(1k) < p(2k) < p(3k)
  bool growth_in_budget = true;        // best at B/4 <= B/2 <= B
};

// EvaluationOnly unless g was built from a set U and an oracle universal.
EngineeredVerdict engineered_sup(const forge::Engineered& g, const std::vector<mpq_class>& x,
                                 const mpz_class& n, const Budget& b);

// Exact value of p with the l-chain filled in from (n, k).
mpq_class engineered_value(const forge::Engineered& g, const std::vector<mpq_class>& x,
                           const mpz_class& n, const std::vector<mpz_class>& k);

// l-chain values for (n, k): J2 iterates (MinDegree) or the single code.
std::vector<mpz_class> chain_values(const forge::Engineered& g, const mpz_class& n,
                                    const std::vector<mpz_class>& k);

// inf over n in [0, n_max] of the engineered sups.
ExtRealClass sup_inf_eval(const forge::Indicator& f, const std::vector<mpq_class>& x,
                          const Budget& b, std::size_t n_max = 8);

struct TrichotomyRow {
  enum class Outcome { Agree, Disagree, Skip };
  std::vector<mpq_class> x;
  mpz_class n;
  ExtRealClass expected;
  ExtRealClass got;
  Outcome outcome;
};

struct TrichotomyReport {
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t skips = 0;
  std::vector<TrichotomyRow> rows;
};

std::string to_string(TrichotomyRow::Outcome o);

// For each sample and n <= n_max compares engineered_sup with the case
// split: n = 0 gives ValueOne; n > 0 with <x, n-1> witnessed in U gives
// ExceedsThreshold; n > 0 with <x, n-1> known to lie outside U gives
// ValueZero. Points neither witnessed nor known outside are skipped.
// SpaceMismatch when U is not the set g was built from.
TrichotomyReport verify_trichotomy(const forge::Engineered& g, const ce::SemiOpenSet& U,
                                   const std::vector<std::vector<mpq_class>>& samples,
                                   std::size_t n_max, const Budget& b);

// count points of R^a on the grid p/q, q in {1, 2, 4}, |p/q| <= bound,
// drawn with a seeded generator.
std::vector<std::vector<mpq_class>> grid_samples(std::size_t count, std::size_t a, std::uint64_t seed,
                                                 long bound = 3);

}  // namespace polyforge::evaluate
