#include <fstream>

#include "cli.hpp"
#include "polyforge/expr/emit.hpp"
#include "polyforge/forge/presets.hpp"

namespace polyforge::cli {

namespace {

std::string canonical_preset(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "wellorder" || name == "well_order") return "well-order";
  if (name == "inacc" || name == "inaccessible") return "inaccessible";
  if (name == "banachtarski" || name == "banach_tarski" || name == "bt") return "banach-tarski";
  return name;
}

forge::Mode mode_of(const std::string& s) {
  if (s == "mindeg") return forge::Mode::MinDegree;
  if (s == "minvars") return forge::Mode::MinVars;
  return forge::parse_mode(s);
}

universal::UniversalPtr universal_of(const std::string& s) {
  if (s == "jones58") return universal::jones58();
  if (s == "jones9") return universal::jones9();
  if (s == "jones28") return universal::jones28();
  throw CLI::ValidationError("unknown universal polynomial: " + s);
}

}  // namespace

void add_forge(CLI::App& app, std::vector<Command>& out) {
  auto* forge = app.add_subcommand("forge", "build and emit polynomials");
  forge->require_subcommand(1);

  struct EmitOpts {
    std::string preset, format = "text", mode = "mindeg", universal = "jones58", output;
    bool zero_based = false;
  };
  auto eo = std::make_shared<EmitOpts>();
  auto* emit = forge->add_subcommand("emit", "emit a preset's quantified polynomial");
  emit->add_option("--preset", eo->preset, "vitali | well-order | inaccessible | banach-tarski")->required();
  emit->add_option("--format", eo->format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  emit->add_option("--mode", eo->mode, "mindeg | minvars")
      ->check(CLI::IsMember({"mindeg", "minvars", "min-degree", "min-vars"}))
      ->capture_default_str();
  emit->add_option("--universal", eo->universal, "jones58 | jones9 | jones28")->capture_default_str();
  emit->add_flag("--zero-based", eo->zero_based, "shift the universal's unknowns so witnesses start at 0");
  emit->add_option("-o,--output", eo->output, "write to a file instead of stdout");
  out.push_back({emit, [eo] {
                   forge::EngineerOptions opt;
                   opt.mode = mode_of(eo->mode);
                   opt.zero_based = eo->zero_based;
                   auto s = forge::preset(canonical_preset(eo->preset), universal_of(eo->universal), opt);
                   expr::Format f = eo->format == "json"    ? expr::Format::Json
                                    : eo->format == "latex" ? expr::Format::LaTeX
                                                            : expr::Format::Text;
                   std::string text = expr::emit(s.expr, f);
                   if (eo->output.empty()) {
                     std::cout << text << "\n";
                   } else {
                     std::ofstream os(eo->output);
                     if (!os) throw CLI::ValidationError("cannot write " + eo->output);
                     os << text << "\n";
                   }
                   return int(kOk);
                 }});

  struct ArityOpts {
    std::size_t a = 1, m = 0, nu = 58;
    std::string delta = "4", mode = "mindeg", format = "text";
  };
  auto ao = std::make_shared<ArityOpts>();
  auto* arity = forge->add_subcommand("arity", "variable and degree bookkeeping");
  arity->add_option("--a", ao->a, "ambient dimension")->check(CLI::PositiveNumber)->capture_default_str();
  arity->add_option("--m", ao->m, "projective level (0 = the bare indicator)")->capture_default_str();
  arity->add_option("--nu", ao->nu, "unknowns of the universal polynomial")->capture_default_str();
  arity->add_option("--delta", ao->delta, "degree of the universal polynomial")->capture_default_str();
  arity->add_option("--mode", ao->mode, "mindeg | minvars | both")
      ->check(CLI::IsMember({"mindeg", "minvars", "both"}))
      ->capture_default_str();
  arity->add_option("--format", ao->format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  out.push_back({arity, [ao] {
                   mpz_class delta;
                   if (delta.set_str(ao->delta, 10) != 0 || delta < 0)
                     throw CLI::ValidationError("--delta must be a natural");
                   std::vector<forge::Mode> modes;
                   if (ao->mode != "minvars") modes.push_back(forge::Mode::MinDegree);
                   if (ao->mode != "mindeg") modes.push_back(forge::Mode::MinVars);
                   Json rows = Json::array();
                   for (auto md : modes) {
                     auto r = forge::arity_row(ao->a, ao->m, ao->nu, expr::Degree(delta), md);
                     Json row;
                     row["a"] = r.a;
                     row["m"] = r.m;
                     row["nu"] = r.nu;
                     row["delta"] = delta.get_str();
                     row["mode"] = forge::to_string(md);
                     row["k_count"] = r.k_count;
                     row["degree"] = r.degree.to_string();
                     if (md == forge::Mode::MinVars)
                       row["nominal_degree"] =
                           forge::nominal_min_vars_degree(ao->a + ao->m, expr::Degree(delta)).to_string();
                     row["signature"] = r.signature;
                     rows.push_back(row);
                   }
                   if (ao->format == "json") {
                     print(rows);
                   } else {
                     std::cout << "mode        a  m  nu  k_count  degree  signature\n";
                     for (const auto& r : rows) {
                       std::cout << r["mode"].get<std::string>() << (r["mode"] == "min-vars" ? "    " : "  ")
                                 << r["a"] << "  " << r["m"] << "  " << r["nu"] << "  " << r["k_count"] << "  "
                                 << r["degree"].get<std::string>() << "  " << r["signature"].get<std::string>()
                                 << "\n";
                     }
                   }
                   return int(kOk);
                 }});
}

}  // namespace polyforge::cli
