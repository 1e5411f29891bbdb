#include "cli.hpp"
#include "polyforge/ce/presets.hpp"
#include "polyforge/coding/nbhd.hpp"
#include "polyforge/coding/pairing.hpp"
#include "polyforge/coding/valuation.hpp"

namespace polyforge::cli {

namespace {

coding::Factor parse_factor(const std::string& s) {
  if (s == "nat" || s == "N") return coding::Factor::Nat;
  if (s == "baire") return coding::Factor::Baire;
  if (s == "real" || s == "R") return coding::Factor::Real;
  if (s == "extreal") return coding::Factor::ExtReal;
  throw CLI::ValidationError("unknown factor: " + s);
}

}  // namespace

void add_coding(CLI::App& app, std::vector<Command>& out) {
  auto* co = app.add_subcommand("coding", "neighborhood codes and pairing functions");
  co->require_subcommand(1);

  struct DecodeOpts {
    std::vector<std::string> factors;
    std::string index;
  };
  auto dopt = std::make_shared<DecodeOpts>();
  auto* dec = co->add_subcommand("decode", "region coded by an index");
  dec->add_option("--factor", dopt->factors, "nat, baire, real or extreal; repeat for products")
      ->required();
  dec->add_option("--index", dopt->index, "code index")->required();
  out.push_back({dec, [dopt] {
                   coding::SpaceCode sp;
                   for (const auto& f : dopt->factors) sp.factors.push_back(parse_factor(f));
                   mpz_class idx(dopt->index);
                   if (idx < 0) throw CLI::ValidationError("index must be natural");
                   auto r = coding::decode_nbhd({sp, coding::CodeIndex(idx)});
                   print(Json::parse(r.to_json()));
                   return int(kOk);
                 }});

  auto lo = std::make_shared<std::string>(), hi = std::make_shared<std::string>();
  auto* enc = co->add_subcommand("encode", "index of a real interval (lo, hi)");
  enc->add_option("--lo", *lo)->required();
  enc->add_option("--hi", *hi)->required();
  out.push_back({enc, [lo, hi] {
                   auto a = ce::parse_rational(*lo), b = ce::parse_rational(*hi);
                   Json j;
                   j["index"] = coding::encode_interval(a, b).get_str();
                   print(j);
                   return int(kOk);
                 }});

  auto values = std::make_shared<std::string>();
  auto* pr = co->add_subcommand("pair", "J2 or the folded J_n of naturals");
  pr->add_option("--values", *values, "comma separated naturals")->required();
  out.push_back({pr, [values] {
                   auto xs = parse_naturals(*values);
                   if (xs.size() < 2) throw CLI::ValidationError("need at least two values");
                   Json j;
                   j["code"] = coding::pairN(xs).get_str();
                   print(j);
                   return int(kOk);
                 }});

  auto code = std::make_shared<std::string>();
  auto arity = std::make_shared<std::size_t>(2);
  auto* up = co->add_subcommand("unpair", "inverse of J_n");
  up->add_option("--code", *code)->required();
  up->add_option("--arity", *arity)->check(CLI::Range(2, 64))->capture_default_str();
  out.push_back({up, [code, arity] {
                   mpz_class v(*code);
                   if (v < 0) throw CLI::ValidationError("code must be natural");
                   Json vals = Json::array();
                   for (const auto& x : coding::unpairN(v, *arity)) vals.push_back(x.get_str());
                   Json j;
                   j["values"] = vals;
                   print(j);
                   return int(kOk);
                 }});

  auto p = std::make_shared<unsigned long>(2);
  auto n = std::make_shared<std::string>();
  auto* val = co->add_subcommand("valuation", "p-adic valuation");
  val->add_option("--p", *p)->check(CLI::Range(2ul, 1ul << 32))->capture_default_str();
  val->add_option("--n", *n)->required();
  out.push_back({val, [p, n] {
                   Json j;
                   j["valuation"] = coding::padic_valuation(*p, mpz_class(*n));
                   print(j);
                   return int(kOk);
                 }});
}

}  // namespace polyforge::cli
