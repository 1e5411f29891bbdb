#include "polyforge/forge/presets.hpp"

#include "polyforge/error.hpp"

namespace polyforge::forge {

const std::vector<PresetInfo>& preset_table() {
  static const std::vector<PresetInfo> table{
      {"vitali", 1, 2, Pointclass::Pi, {"x"}, {"y", "z"}},
      {"well-order", 2, 2, Pointclass::Pi, {"x", "y"}, {"z", "w"}},
      {"inaccessible", 2, 3, Pointclass::Sigma, {"x", "y"}, {"z", "w", "t"}},
      {"banach-tarski", 4, 2, Pointclass::Pi, {"m", "x", "y", "z"}, {"w", "t"}},
  };
  return table;
}

const PresetInfo& preset_info(const std::string& name) {
  for (const auto& p : preset_table())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : preset_table()) out.push_back(p.name);
  return out;
}

Stacked preset(const std::string& name, const universal::UniversalPtr& q, const EngineerOptions& opt) {
  const PresetInfo& info = preset_info(name);
  SigmaSpec spec;
  spec.level = info.level;
  spec.ambient = info.ambient;
  spec.cls = info.cls;
  spec.free = info.free;
  spec.bound = info.bound;
  return stack(spec, q, opt);
}

VariableCount vitali_min_vars_count() {
  const PresetInfo& v = preset_info("vitali");
  std::size_t nu = universal::jones_meta()[2].unknowns;
  EngineerOptions opt;
  opt.mode = Mode::MinVars;
  Stacked s = preset("vitali", universal::jones9(), opt);
  return {witness_count(v.ambient, nu, Mode::MinVars), s.k_count()};
}

ArityRow arity_row(std::size_t a, std::size_t m, std::size_t nu, const expr::Degree& delta, Mode mode) {
  if (delta.is_minus_infinity()) throw std::invalid_argument("universal degree must be finite");
  auto q = universal::UniversalPoly::metadata_only("q", nu, delta.value(), {});
  EngineerOptions opt;
  opt.mode = mode;
  ArityRow row{a, m, nu, mode, 0, {}, {}};
  if (m == 0) {
    Indicator ind = pi02_indicator_symbolic(a, q, opt);
    row.k_count = ind.flat.size();
    row.degree = ind.expr.degree();
    row.signature = ind.expr.arity().signature;
  } else {
    SigmaSpec spec;
    spec.level = m;
    spec.ambient = a;
    Stacked s = stack(spec, q, opt);
    row.k_count = s.k_count();
    row.degree = s.expr.degree();
    row.signature = s.expr.arity().signature;
  }
  return row;
}

}  // namespace polyforge::forge
