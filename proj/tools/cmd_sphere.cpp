#include "cli.hpp"
#include "polyforge/ce/presets.hpp"
#include "polyforge/sphere/alpha.hpp"
#include "polyforge/sphere/classify.hpp"
#include "polyforge/sphere/freeness.hpp"

namespace polyforge::cli {

namespace {

Json axis_json(const sphere::IntVec3& v) {
  return Json::array({v[0].get_str(), v[1].get_str(), v[2].get_str()});
}

}  // namespace

void add_sphere(CLI::App& app, std::vector<Command>& out) {
  auto* sp = app.add_subcommand("sphere", "free rotation group and the sphere decomposition");
  sp->require_subcommand(1);

  auto max_len = std::make_shared<std::size_t>(8);
  auto* fr = sp->add_subcommand("freeness", "no nontrivial short word maps to I");
  fr->add_option("--max-len", *max_len, "word length bound")->check(CLI::PositiveNumber)->capture_default_str();
  out.push_back({fr, [max_len] {
                   auto c = sphere::freeness_check(*max_len);
                   Json j;
                   j["max_len"] = c.max_len;
                   j["words_checked"] = c.words_checked;
                   j["words_at_max_len"] = c.words_at_max_len;
                   j["identity_collisions"] = c.identity_collisions;
                   j["mod5_vanishing"] = c.mod5_zero;
                   j["non_rotations"] = c.non_rotations;
                   j["certificates_agree"] = c.agree;
                   j["free"] = c.free();
                   print(j);
                   return c.free() && c.non_rotations == 0 ? int(kOk) : int(kDisagreement);
                 }});

  auto dlen = std::make_shared<std::size_t>(8);
  auto* dec = sp->add_subcommand("decompose", "partition and paradox laws of A1..A4");
  dec->add_option("--max-len", *dlen, "word length bound")->check(CLI::Range(2, 14))->capture_default_str();
  out.push_back({dec, [dlen] {
                   auto r = sphere::decomposition_check(*dlen);
                   Json j;
                   j["max_len"] = r.max_len;
                   j["words"] = r.words;
                   j["piece_counts"] = r.piece_counts;
                   j["partition_failures"] = r.partition_failures;
                   j["law1_failures"] = r.law1_failures;
                   j["law2_failures"] = r.law2_failures;
                   j["ok"] = r.ok();
                   print(j);
                   return r.ok() ? int(kOk) : int(kDisagreement);
                 }});

  struct SepOpts {
    std::size_t count = 50;
    long precision = 128, max_precision = 512;
  };
  auto so = std::make_shared<SepOpts>();
  auto* sep = sp->add_subcommand("separation", "distinct fixed points have distinct alpha-axis projections");
  sep->add_option("--count", so->count, "number of distinct axes")->check(CLI::Range(2, 100000))
      ->capture_default_str();
  sep->add_option("--precision", so->precision, "starting precision in bits")->check(CLI::Range(16, 1 << 20))
      ->capture_default_str();
  sep->add_option("--max-precision", so->max_precision, "refinement cap in bits")->capture_default_str();
  out.push_back({sep, [so] {
                   auto c = sphere::separation_check(so->count, so->precision, so->max_precision);
                   Json j;
                   j["count"] = c.count;
                   j["precision"] = c.precision;
                   j["separated"] = c.separated;
                   Json axes = Json::array();
                   for (std::size_t i = 0; i < c.axes.size(); ++i) {
                     Json a;
                     a["index"] = c.axes[i].index.get_str();
                     a["word"] = c.axes[i].word.to_string();
                     a["axis"] = axis_json(c.axes[i].axis);
                     a["inner_product"] = c.products[i].to_string();
                     axes.push_back(a);
                   }
                   j["axes"] = axes;
                   print(j);
                   return c.separated ? int(kOk) : int(kDisagreement);
                 }});

  struct ClsOpts {
    std::string point, budget = "1000", tolerance = "0";
    std::size_t transversal_budget = 256;
  };
  auto co = std::make_shared<ClsOpts>();
  auto* cls = sp->add_subcommand("classify", "16-piece classification with the mock transversal");
  cls->add_option("--point", co->point, "x,y,z on the unit sphere")->required();
  cls->add_option("--budget", co->budget, "D* search steps")->capture_default_str();
  cls->add_option("--tolerance", co->tolerance, "allowed | |x|^2 - 1 |")->capture_default_str();
  cls->add_option("--transversal-budget", co->transversal_budget, "words searched by the mock transversal")
      ->capture_default_str();
  out.push_back({cls, [co] {
                   auto p = parse_rationals(co->point);
                   if (p.size() != 3) throw CLI::ValidationError("--point needs three coordinates");
                   sphere::MockTransversal t(co->transversal_budget);
                   auto r = sphere::piece16_classify({p[0], p[1], p[2]}, mpz_class(co->budget), t,
                                                     ce::parse_rational(co->tolerance));
                   Json j;
                   j["point"] = Json::array({q_str(p[0]), q_str(p[1]), q_str(p[2])});
                   j["d_star"] = r.in_d_star == sphere::Membership::Yes ? "yes" : "unknown";
                   if (r.witness) {
                     j["witness"] = {{"alpha_power", r.witness->alpha_power.get_str()},
                                     {"word_index", r.witness->word_index.get_str()},
                                     {"word", r.witness->word.to_string()}};
                   }
                   j["transversal_word"] = r.choice.word.to_string();
                   j["representative"] =
                       Json::array({q_str(r.choice.representative[0]), q_str(r.choice.representative[1]),
                                    q_str(r.choice.representative[2])});
                   j["a_index"] = r.a_index;
                   if (r.piece)
                     j["piece"] = *r.piece;
                   else
                     j["piece"] = "unknown";
                   print(j);
                   return int(kOk);
                 }});
}

}  // namespace polyforge::cli
