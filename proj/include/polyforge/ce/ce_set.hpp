#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace polyforge::ce {

// A computably enumerable set of naturals, given as a pure function from
// step index to the element emitted at that step (if any).
class CeSet {
 public:
  virtual ~CeSet() = default;
  virtual std::string name() const = 0;
  virtual std::optional<mpz_class> emit(const mpz_class& step) const = 0;
  // Least step < budget at which v is emitted. The default scans.
  virtual std::optional<mpz_class> first_step(const mpz_class& v, const mpz_class& budget) const;
  bool member(const mpz_class& v, const mpz_class& budget) const {
    return first_step(v, budget).has_value();
  }
};

using CeSetPtr = std::shared_ptr<const CeSet>;

class FunctionCeSet : public CeSet {
 public:
  using Emit = std::function<std::optional<mpz_class>(const mpz_class&)>;
  using Locate = std::function<std::optional<mpz_class>(const mpz_class&)>;

  // locate(v), when given, returns the first step emitting v without
  // scanning.
  FunctionCeSet(std::string name, Emit emit, Locate locate = {})
      : name_(std::move(name)), emit_(std::move(emit)), locate_(std::move(locate)) {}

  std::string name() const override { return name_; }
  std::optional<mpz_class> emit(const mpz_class& step) const override { return emit_(step); }
  std::optional<mpz_class> first_step(const mpz_class& v, const mpz_class& budget) const override;

 private:
  std::string name_;
  Emit emit_;
  Locate locate_;
};

CeSetPtr evens();
CeSetPtr empty_ce_set();

}  // namespace polyforge::ce
