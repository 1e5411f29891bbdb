#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polyforge/ce/ce_set.hpp"
#include "polyforge/expr/dag.hpp"

namespace polyforge::universal {

// W1 ranks considered by oracle membership unless stated otherwise.
mpz_class default_oracle_budget();

// A positively universal polynomial q(y1..y_nu; l, m). Three flavors:
// a symbolic body (Figure 1), a metadata-only record whose body is not
// available, and an oracle stand-in with no unknowns whose zero set is a
// c.e. set. The oracle flavor is not a polynomial; it only evaluates.
class UniversalPoly : public expr::Callable {
 public:
  enum class Kind { Symbolic, MetadataOnly, Virtual };

  static std::shared_ptr<const UniversalPoly> symbolic(std::string name, expr::NodeRef body,
                                                       std::vector<std::string> unknowns,
                                                       std::string argument,
                                                       std::vector<std::string> params);
  static std::shared_ptr<const UniversalPoly> metadata_only(std::string name, std::size_t nu,
                                                            mpz_class delta,
                                                            std::vector<std::string> params);
  static std::shared_ptr<const UniversalPoly> virtual_oracle(ce::CeSetPtr w, mpz_class budget);

  Kind kind() const { return kind_; }
  std::size_t nu() const { return unknowns_.size(); }
  const expr::Degree& delta() const { return delta_; }
  bool has_body() const { return body_ != nullptr; }
  const expr::NodeRef& body() const { return body_; }
  const std::vector<std::string>& unknowns() const { return unknowns_; }
  const std::string& argument() const { return argument_; }
  const std::vector<std::string>& params() const { return params_; }
  const ce::CeSetPtr& oracle() const { return oracle_; }
  const mpz_class& oracle_budget() const { return budget_; }

  // Oracle flavor: is l witnessed in the c.e. set within the budget?
  bool solvable(const mpz_class& l) const;

  const std::string& name() const override { return name_; }
  std::size_t unknown_count() const override { return unknowns_.size(); }
  expr::Degree degree() const override { return delta_; }
  bool evaluation_only() const override { return kind_ == Kind::Virtual; }
  // Oracle flavor: 0 when the argument is solvable, else 1 (the largest
  // value of -q over the unknowns is 0 or at most -1). Other flavors throw
  // EvaluationOnly: their parameters are never instantiated.
  mpq_class call(const std::vector<mpq_class>& args) const override;

 private:
  UniversalPoly() = default;
  Kind kind_ = Kind::Symbolic;
  std::string name_;
  expr::Degree delta_;
  expr::NodeRef body_;
  std::vector<std::string> unknowns_;
  std::string argument_;
  std::vector<std::string> params_;
  ce::CeSetPtr oracle_;
  mpz_class budget_;
};

using UniversalPtr = std::shared_ptr<const UniversalPoly>;

struct JonesRecord {
  std::size_t unknowns;
  mpz_class degree;
  friend bool operator==(const JonesRecord&, const JonesRecord&) = default;
};

// The (unknowns, degree) pairs published for Jones's universal polynomials.
const std::vector<JonesRecord>& jones_meta();

// Figure 1 as text, its checksum, and the parsed DAG over x1..x28 with
// argument n and parameters m1, m2, m3.
const std::string& jones_figure1_text();
std::uint64_t fnv1a64(const std::string& s);
extern const std::uint64_t kJonesFigure1Checksum;
expr::NodeRef jones_figure1(expr::DagBuilder& b);
expr::NodeRef jones_figure1();

UniversalPtr jones28();
UniversalPtr jones58();
UniversalPtr jones9();
UniversalPtr oracle_universal(ce::CeSetPtr w, mpz_class budget = default_oracle_budget());

// x -> x + 1 for each listed variable; UnknownVariable if one does not occur.
expr::NodeRef shift_one_based(const expr::NodeRef& e, const std::vector<std::string>& vars,
                              expr::DagBuilder& b);

// Lookup by name for JSON parsing: jones58, jones9, jones28.
std::shared_ptr<const expr::Callable> resolve_universal(const std::string& name);

}  // namespace polyforge::universal
