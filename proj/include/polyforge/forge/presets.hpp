#pragma once

#include <string>
#include <vector>

#include "polyforge/forge/engineer.hpp"

namespace polyforge::forge {

struct PresetInfo {
  std::string name;
  std::size_t ambient;
  std::size_t level;
  Pointclass cls;
  std::vector<std::string> free;
  std::vector<std::string> bound;
};

// vitali, well-order, inaccessible, banach-tarski
const std::vector<PresetInfo>& preset_table();
const PresetInfo& preset_info(const std::string& name);
std::vector<std::string> preset_names();

// The preset with a symbolic kernel, defaulting to the 58-unknown universal.
Stacked preset(const std::string& name, const universal::UniversalPtr& q = universal::jones58(),
               const EngineerOptions& opt = {});

// Variable count of the Vitali form built with the 9-unknown universal in
// MinVars mode: the count obtained when the two real blocks are not charged
// to the kernel dimension, and the count of the actual construction.
struct VariableCount {
  std::size_t nominal;
  std::size_t actual;
};
VariableCount vitali_min_vars_count();

struct ArityRow {
  std::size_t a, m, nu;
  Mode mode;
  std::size_t k_count;
  expr::Degree degree;
  std::string signature;
};
// Built from a metadata-only universal with the given unknowns and degree;
// m = 0 gives the bare Pi^0_2 indicator.
ArityRow arity_row(std::size_t a, std::size_t m, std::size_t nu, const expr::Degree& delta, Mode mode);

}  // namespace polyforge::forge
