#include "cli.hpp"
#include "polyforge/ce/presets.hpp"
#include "polyforge/evaluate/search.hpp"
#include "polyforge/expr/infix.hpp"

namespace polyforge::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// inf:N:k1,k2 or sup:R:y
expr::QuantBlock parse_block(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() != 3) throw CLI::ValidationError("block must look like sup:N:k1,k2");
  expr::QuantBlock blk;
  if (parts[0] == "sup")
    blk.q = expr::Quantifier::Sup;
  else if (parts[0] == "inf")
    blk.q = expr::Quantifier::Inf;
  else
    throw CLI::ValidationError("quantifier must be sup or inf: " + parts[0]);
  if (parts[1] == "N")
    blk.dom = expr::Domain::Nat;
  else if (parts[1] == "Z")
    blk.dom = expr::Domain::Int;
  else if (parts[1] == "R")
    blk.dom = expr::Domain::Real;
  else
    throw CLI::ValidationError("domain must be N, Z or R: " + parts[1]);
  blk.vars = split(parts[2], ',');
  for (const auto& v : blk.vars)
    if (v.empty()) throw CLI::ValidationError("empty variable name in block " + s);
  return blk;
}

}  // namespace

void add_eval(CLI::App& app, std::vector<Command>& out) {
  struct EvalOpts {
    std::string matrix;
    std::vector<std::string> blocks, free;
    std::string nat_bound = "16", threshold = "1000", real_step = "1", real_bound = "4";
    std::size_t stages = 1;
  };
  auto o = std::make_shared<EvalOpts>();
  auto* ev = app.add_subcommand("eval", "bounded evaluation of a quantified polynomial");
  ev->add_option("--matrix", o->matrix, "integer polynomial in infix syntax")->required();
  ev->add_option("--block", o->blocks, "quantifier block, outermost first, e.g. sup:N:k");
  ev->add_option("--free", o->free, "free variable value, e.g. x=1/2");
  ev->add_option("--nat-bound", o->nat_bound)->capture_default_str();
  ev->add_option("--threshold", o->threshold)->capture_default_str();
  ev->add_option("--real-step", o->real_step)->capture_default_str();
  ev->add_option("--real-bound", o->real_bound)->capture_default_str();
  ev->add_option("--stages", o->stages, "extra doubled budgets confirming the value")->capture_default_str();
  out.push_back({ev, [o] {
                   std::vector<expr::QuantBlock> prefix;
                   for (const auto& s : o->blocks) prefix.push_back(parse_block(s));
                   evaluate::Assignment free;
                   std::vector<std::string> names;
                   for (const auto& s : o->free) {
                     auto eq = s.find('=');
                     if (eq == std::string::npos) throw CLI::ValidationError("--free needs name=value");
                     names.push_back(s.substr(0, eq));
                     free[names.back()] = ce::parse_rational(s.substr(eq + 1));
                   }
                   expr::DagBuilder b;
                   expr::NodeRef m = expr::parse_infix(o->matrix, b);
                   expr::QuantifiedExpr q(prefix, names, m);

                   evaluate::Budget budget;
                   budget.nat_bound = mpz_class(o->nat_bound);
                   budget.threshold = ce::parse_rational(o->threshold);
                   budget.real_step = ce::parse_rational(o->real_step);
                   budget.real_bound = ce::parse_rational(o->real_bound);
                   budget.stages = o->stages;
                   budget.validate();
                   auto r = evaluate::sup_inf_eval(q, free, budget);
                   Json j;
                   j["kind"] = evaluate::to_string(r.kind);
                   j["value"] = q_str(r.value);
                   print(j);
                   return int(kOk);
                 }});
}

}  // namespace polyforge::cli
