#include <fstream>
#include <random>

#include "cli.hpp"
#include "polyforge/ce/presets.hpp"
#include "polyforge/ce/w1.hpp"
#include "polyforge/coding/nbhd.hpp"
#include "polyforge/coding/pairing.hpp"
#include "polyforge/evaluate/engineered.hpp"
#include "polyforge/forge/ball.hpp"

namespace polyforge::cli {

namespace {

std::vector<std::vector<mpq_class>> read_samples(const std::string& path, std::size_t a) {
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("cannot read " + path);
  Json j = Json::parse(is);
  std::vector<std::vector<mpq_class>> out;
  auto coord = [](const Json& v) {
    if (v.is_string()) return ce::parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    throw CLI::ValidationError("sample coordinates must be integers or rational strings");
  };
  for (const auto& p : j) {
    std::vector<mpq_class> x;
    if (p.is_array())
      for (const auto& c : p) x.push_back(coord(c));
    else
      x.push_back(coord(p));
    if (x.size() != a) throw CLI::ValidationError("sample of the wrong dimension in " + path);
    out.push_back(std::move(x));
  }
  return out;
}

Json points_json(const std::vector<mpq_class>& x) {
  Json j = Json::array();
  for (const auto& c : x) j.push_back(q_str(c));
  return j;
}

}  // namespace

void add_verify(CLI::App& app, std::vector<Command>& out) {
  auto* verify = app.add_subcommand("verify", "check constructions against oracles");
  verify->require_subcommand(1);

  struct TriOpts {
    std::string set = "empty", samples, mode = "mindeg", threshold = "1000000";
    std::size_t a = 1, n_max = 8, random = 25;
    std::string nat_bound = "64", set_steps = "1024";
    std::uint64_t seed = 1;
    bool verbose = false;
  };
  auto to = std::make_shared<TriOpts>();
  auto* tri = verify->add_subcommand("trichotomy", "engineered sup against the membership case split");
  tri->add_option("--set", to->set, "empty | full | box:lo,hi | boxes:lo,hi;lo,hi | point:c | punctured:c")
      ->capture_default_str();
  tri->add_option("--a", to->a, "ambient dimension")->check(CLI::PositiveNumber)->capture_default_str();
  tri->add_option("--nat-bound", to->nat_bound, "witness search bound")->capture_default_str();
  tri->add_option("--threshold", to->threshold, "divergence threshold")->capture_default_str();
  tri->add_option("--set-steps", to->set_steps, "enumeration steps granted to the set")->capture_default_str();
  tri->add_option("--n-max", to->n_max, "largest section index")->capture_default_str();
  tri->add_option("--samples", to->samples, "JSON file with sample points");
  tri->add_option("--random", to->random, "number of seeded grid samples when no file is given")
      ->capture_default_str();
  tri->add_option("--seed", to->seed, "sample seed")->capture_default_str();
  tri->add_option("--mode", to->mode, "mindeg | minvars")
      ->check(CLI::IsMember({"mindeg", "minvars"}))
      ->capture_default_str();
  tri->add_flag("--verbose", to->verbose, "list every row, not only disagreements and skips");
  out.push_back({tri, [to] {
                   auto U = ce::make_preset(to->set, to->a);
                   evaluate::Budget b;
                   b.nat_bound = mpz_class(to->nat_bound);
                   b.threshold = ce::parse_rational(to->threshold);
                   b.set_steps = mpz_class(to->set_steps);
                   b.validate();
                   auto w1 = ce::build_W1(U, to->a);
                   forge::EngineerOptions opt;
                   opt.mode = to->mode == "minvars" ? forge::Mode::MinVars : forge::Mode::MinDegree;
                   auto g = forge::engineer(U, universal::oracle_universal(w1), opt);
                   auto samples = to->samples.empty() ? evaluate::grid_samples(to->random, to->a, to->seed)
                                                      : read_samples(to->samples, to->a);
                   auto rep = evaluate::verify_trichotomy(g, *U, samples, to->n_max, b);
                   Json j;
                   j["set"] = U->name();
                   j["a"] = to->a;
                   j["nat_bound"] = b.nat_bound.get_str();
                   j["threshold"] = q_str(b.threshold);
                   j["n_max"] = to->n_max;
                   j["samples"] = samples.size();
                   j["agreements"] = rep.agreements;
                   j["disagreements"] = rep.disagreements;
                   j["skips"] = rep.skips;
                   Json rows = Json::array();
                   for (const auto& r : rep.rows) {
                     if (!to->verbose && r.outcome == evaluate::TrichotomyRow::Outcome::Agree) continue;
                     Json row;
                     row["x"] = points_json(r.x);
                     row["n"] = r.n.get_str();
                     row["expected"] = r.expected.to_string();
                     row["got"] = r.got.to_string();
                     row["outcome"] = evaluate::to_string(r.outcome);
                     rows.push_back(row);
                   }
                   j["rows"] = rows;
                   print(j);
                   return rep.disagreements == 0 ? int(kOk) : int(kDisagreement);
                 }});

  struct BallOpts {
    std::size_t a = 2, count = 1000;
    std::uint64_t seed = 1;
  };
  auto bo = std::make_shared<BallOpts>();
  auto* ball = verify->add_subcommand("ball", "sign of r against exact ball membership");
  ball->add_option("--a", bo->a, "dimension")->check(CLI::PositiveNumber)->capture_default_str();
  ball->add_option("--count", bo->count, "random cases")->capture_default_str();
  ball->add_option("--seed", bo->seed, "seed")->capture_default_str();
  out.push_back({ball, [bo] {
                   std::mt19937_64 rng(bo->seed);
                   std::uniform_int_distribution<long> k13(1, 20), k2(0, 40), k4(-20, 20), num(-60, 60),
                       den(1, 12);
                   auto r = forge::ball_poly(bo->a);
                   auto xs = forge::default_reals(bo->a);
                   auto ks = forge::numbered("k", bo->a + 3);
                   std::size_t mismatches = 0, inside = 0;
                   for (std::size_t c = 0; c < bo->count; ++c) {
                     std::vector<mpz_class> k{k13(rng), k2(rng), k13(rng)};
                     for (std::size_t i = 0; i < bo->a; ++i) k.emplace_back(k4(rng));
                     std::vector<mpq_class> x;
                     std::map<std::string, mpq_class> at;
                     for (std::size_t i = 0; i < bo->a; ++i) {
                       mpq_class v(num(rng), den(rng));
                       v.canonicalize();
                       x.push_back(v);
                       at[xs[i]] = v;
                     }
                     for (std::size_t i = 0; i < k.size(); ++i) at[ks[i]] = mpq_class(k[i]);
                     bool member = forge::in_ball(forge::ball_of(k, bo->a), x);
                     inside += member;
                     if ((r.evaluate(at) >= 0) != member) ++mismatches;
                   }
                   expr::Polynomial t = expr::Polynomial::variable("t");
                   std::map<std::string, expr::Polynomial> scale;
                   for (const auto& k : ks) scale.emplace(k, t * expr::Polynomial::variable(k));
                   bool homogeneous = r.substitute(scale) == t.pow(3) * r;
                   Json j;
                   j["a"] = bo->a;
                   j["cases"] = bo->count;
                   j["inside"] = inside;
                   j["mismatches"] = mismatches;
                   j["homogeneous_degree_3"] = homogeneous;
                   print(j);
                   return mismatches == 0 && homogeneous ? int(kOk) : int(kDisagreement);
                 }});

  struct CodingOpts {
    std::size_t max_arity = 5, range = 50;
  };
  auto co = std::make_shared<CodingOpts>();
  auto* coding = verify->add_subcommand("coding", "pairing round trips");
  coding->add_option("--max-arity", co->max_arity, "largest tuple length")->capture_default_str();
  coding->add_option("--range", co->range, "coordinates in [0, range] for pairs, fewer for longer tuples")
      ->capture_default_str();
  out.push_back({coding, [co] {
                   Json j;
                   std::size_t failures = 0, checked = 0;
                   for (long x = 0; x <= long(co->range); ++x)
                     for (long y = 0; y <= long(co->range); ++y) {
                       ++checked;
                       auto [u, v] = coding::unpair2(coding::pair2(x, y));
                       if (u != x || v != y) ++failures;
                     }
                   for (std::size_t n = 3; n <= co->max_arity; ++n) {
                     std::vector<mpz_class> t(n, 0);
                     long side = n == 3 ? 12 : n == 4 ? 6 : 4;
                     for (;;) {
                       ++checked;
                       if (coding::unpairN(coding::pairN(t), n) != t) ++failures;
                       std::size_t i = 0;
                       while (i < n && t[i] == side) t[i++] = 0;
                       if (i == n) break;
                       ++t[i];
                     }
                   }
                   j["checked"] = checked;
                   j["failures"] = failures;
                   print(j);
                   return failures == 0 ? int(kOk) : int(kDisagreement);
                 }});
}

}  // namespace polyforge::cli
