#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyforge/ce/semi_open.hpp"
#include "polyforge/expr/quantified.hpp"
#include "polyforge/universal/universal.hpp"

namespace polyforge::forge {

enum class Mode { MinDegree, MinVars };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct EngineerOptions {
  Mode mode = Mode::MinDegree;
  // Names of the real coordinates; defaults to default_reals(a).
  std::vector<std::string> reals;
  std::string section = "n";
  // Replace each unknown u of a symbolic body (and its argument) by u + 1
  // so that natural witnesses start at 0.
  bool zero_based = false;
};

// p(x, n, y, l, k) with
//   sup_{y, l, k} p(x, n, ...) >= 0 iff <x, n> in U,
// and < 0 otherwise. p = r(x, k) - k1^2 k2 (q(y; l) + chain penalty).
struct Engineered {
  expr::NodeRef p;
  expr::NodeRef r;        // ball part
  expr::NodeRef q;        // universal applied to (y; l_last)
  expr::NodeRef penalty;  // sum of squared pairing constraints
  std::vector<std::string> xs;
  std::string n;
  std::vector<std::string> ys, ls, ks;
  std::vector<std::string> params;
  Mode mode;
  std::size_t a;
  universal::UniversalPtr universal;
  ce::SemiOpenPtr U;  // null for symbolic emission

  // y, then l, then k
  std::vector<std::string> witnesses() const;
  // sup over the witnesses, free (x, n)
  expr::QuantifiedExpr quantified() const;
  // The degree predicted by closed-form counting.
  expr::Degree nominal_degree() const;
};

// Builds p for U over R^a x N. SpaceMismatch when U does not live there or
// when an oracle universal was built over a different ambient dimension.
Engineered engineer(const ce::SemiOpenPtr& U, const universal::UniversalPtr& q,
                    const EngineerOptions& opt = {});
// Same polynomial with U left symbolic (only its dimension is fixed).
Engineered engineer_symbolic(std::size_t a, const universal::UniversalPtr& q,
                             const EngineerOptions& opt = {});

// nu + 2(3 + a) for MinDegree, nu + 1 + 3 + a for MinVars.
std::size_t witness_count(std::size_t a, std::size_t nu, Mode mode);
// max{3 + delta, 7} or max{3 + delta, 3 + 2^(4 + a)}.
expr::Degree engineered_degree(std::size_t a, const expr::Degree& delta, Mode mode);
// The closed form max{3 + delta, 11 + 2a} stated for MinVars.
expr::Degree nominal_min_vars_degree(std::size_t a, const expr::Degree& delta);

// inf_n sup_{k1..kK} p(x, n, k) with the witnesses flattened into one block.
struct Indicator {
  Engineered base;
  expr::QuantifiedExpr expr;
  std::vector<std::string> flat;  // k1..kK in the order y, l, k
};
Indicator pi02_indicator(const ce::Pi02Spec& spec, const universal::UniversalPtr& q,
                         const EngineerOptions& opt = {});
Indicator pi02_indicator_symbolic(std::size_t a, const universal::UniversalPtr& q,
                                  const EngineerOptions& opt = {});

enum class Pointclass { Sigma, Pi };

// A projective set of level m >= 1 over R^a: the kernel is a Pi^0_2 set
// over R^(a+m) (given by U, or symbolic when U is null), the m real
// coordinates are quantified alternately, sup first for Sigma. Pi classes
// are the complements of the Sigma construction over the same kernel.
struct SigmaSpec {
  std::size_t level = 1;
  std::size_t ambient = 1;
  Pointclass cls = Pointclass::Sigma;
  ce::SemiOpenPtr kernel;  // may be null
  std::vector<std::string> free;   // a names
  std::vector<std::string> bound;  // m names
};

struct Stacked {
  Indicator indicator;  // over free followed by bound
  expr::QuantifiedExpr expr;
  std::size_t k_count() const { return indicator.flat.size(); }
};

Stacked stack(const SigmaSpec& spec, const universal::UniversalPtr& q, const EngineerOptions& opt = {});

// 6 + nu + 2a + 2m (MinDegree).
std::size_t stacked_k_count(std::size_t a, std::size_t m, std::size_t nu, Mode mode);

// Negates the prefix and replaces the matrix by 1 - matrix.
expr::QuantifiedExpr complement(const expr::QuantifiedExpr& e);

}  // namespace polyforge::forge
