#pragma once

#include <memory>
#include <optional>
#include <string>

#include "polyforge/coding/nbhd.hpp"

namespace polyforge::ce {

enum class Semi { Yes, Unknown };

// A union of basic neighborhoods whose codes are enumerated step by step.
class SemiOpenSet {
 public:
  virtual ~SemiOpenSet() = default;
  virtual std::string name() const = 0;
  virtual const coding::SpaceCode& space() const = 0;
  virtual std::optional<coding::NbhdCode> emit(const mpz_class& step) const = 0;
  // Exact membership in the denoted set, for sets simple enough to know it.
  virtual std::optional<bool> contains_exact(const coding::Point&) const { return std::nullopt; }
};

using SemiOpenPtr = std::shared_ptr<const SemiOpenSet>;

// Yes iff a code emitted at a step < budget contains the point.
Semi member_semidecide(const SemiOpenSet& s, const coding::Point& x, const mpz_class& budget);

// {x : <x, n> in U for all n}, with U over R^a x N.
struct Pi02Spec {
  SemiOpenPtr U;
  std::size_t a;

  Pi02Spec(SemiOpenPtr u, std::size_t ambient);
};

struct SectionReport {
  bool all_witnessed;        // every section n <= n_max witnessed Yes
  std::optional<std::size_t> first_unwitnessed;
};

SectionReport pi02_sections(const Pi02Spec& spec, const std::vector<mpq_class>& x,
                            std::size_t n_max, const mpz_class& budget);

}  // namespace polyforge::ce
