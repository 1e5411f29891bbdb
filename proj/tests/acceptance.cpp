// Runs the acceptance checks. Each prints one line:
//   criterion N: PASS|FAIL  <detail>  (<seconds> s, bound <seconds> s)
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "polyforge/ce/presets.hpp"
#include "polyforge/ce/w1.hpp"
#include "polyforge/coding/nbhd.hpp"
#include "polyforge/coding/pairing.hpp"
#include "polyforge/evaluate/engineered.hpp"
#include "polyforge/evaluate/exact.hpp"
#include "polyforge/evaluate/interval.hpp"
#include "polyforge/evaluate/search.hpp"
#include "polyforge/expr/emit.hpp"
#include "polyforge/forge/ball.hpp"
#include "polyforge/forge/presets.hpp"
#include "polyforge/forge/transform.hpp"
#include "polyforge/sphere/alpha.hpp"
#include "polyforge/sphere/axis.hpp"
#include "polyforge/sphere/freeness.hpp"
#include "polyforge/sphere/words.hpp"
#include "polyforge/universal/universal.hpp"

using namespace polyforge;
using expr::Degree;
using expr::Domain;
using expr::Polynomial;
using expr::Quantifier;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

mpz_class five_pow(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 5, e);
  return r;
}

std::string blocks_of(const expr::QuantifiedExpr& q) {
  std::string s;
  for (const auto& b : q.prefix()) {
    if (!s.empty()) s += " ";
    s += expr::to_string(b.q) + "_" + expr::to_string(b.dom) + std::to_string(b.vars.size());
  }
  return s;
}

// 1. the four presets have the stated free variables, prefixes and degree
Outcome arity_regression() {
  Outcome o;
  struct Row {
    std::string name;
    std::vector<std::string> free;
    std::string blocks;
  };
  const std::vector<Row> rows{
      {"vitali", {"x"}, "inf_R1 sup_R1 inf_N1 sup_N70"},
      {"well-order", {"x", "y"}, "inf_R1 sup_R1 inf_N1 sup_N72"},
      {"inaccessible", {"x", "y"}, "sup_R1 inf_R1 sup_R1 inf_N1 sup_N74"},
      {"banach-tarski", {"m", "x", "y", "z"}, "inf_R1 sup_R1 inf_N1 sup_N76"},
  };
  for (const auto& r : rows) {
    forge::Stacked s = forge::preset(r.name);
    o.check(s.expr.free() == r.free, r.name + " free variables");
    o.check(blocks_of(s.expr) == r.blocks, r.name + " prefix " + blocks_of(s.expr));
    o.check(s.expr.degree() == Degree(7), r.name + " degree " + s.expr.degree().to_string());
  }
  o.note("vitali " + forge::preset("vitali").expr.arity().signature);
  return o;
}

// 2. degree of the engineered polynomial for both published universals
Outcome degree_bookkeeping() {
  Outcome o;
  auto g58 = forge::engineer_symbolic(1, universal::jones58());
  o.check(expr::degree(g58.p) == Degree(7), "degree with (58, 4)");
  o.check(forge::arity_row(1, 0, 58, Degree(4), forge::Mode::MinDegree).degree == Degree(7), "arity row (58, 4)");

  forge::EngineerOptions opt;
  opt.mode = forge::Mode::MinVars;
  auto g9 = forge::engineer_symbolic(1, universal::jones9(), opt);
  Degree expected(47216 * five_pow(58) + 9731);
  Degree got = expr::degree(g9.p);
  o.check(got == expected, "MinVars degree with nine unknowns");
  o.check(g9.nominal_degree() == expected, "MinVars nominal degree");
  o.note("minvars degree " + got.to_string());
  return o;
}

// 3. the transcribed 28-unknown universal
Outcome figure_one() {
  Outcome o;
  expr::NodeRef f = universal::jones_figure1();
  o.check(expr::degree(f) == Degree(2 * five_pow(60)), "degree 2*5^60");
  std::set<std::string> xs;
  for (const auto& v : expr::variables(f))
    if (v[0] == 'x') xs.insert(v);
  o.check(xs.size() == 28, "28 unknowns");
  bool squares = f->op == expr::Op::Add && !f->args.empty();
  for (const auto& a : f->args) squares = squares && a->op == expr::Op::Pow && a->value == 2;
  o.check(squares, "sum of squares");
  o.check(universal::fnv1a64(universal::jones_figure1_text()) == universal::kJonesFigure1Checksum,
          "transcription checksum");
  o.note(std::to_string(f->args.size()) + " squared terms");
  return o;
}

// 4. the sign of r against center/radius membership, and r(x, tk) = t^3 r(x, k)
Outcome ball_semantics() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> kd(0, 12), num(-60, 60), den(1, 8), dim(1, 3);
  std::size_t inside = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t a = dim(rng);
    std::vector<mpz_class> k(3 + a);
    for (auto& v : k) v = kd(rng);
    k[0] += 1;
    k[2] += 1;
    std::vector<mpq_class> x(a);
    evaluate::Assignment at;
    auto xs = forge::default_reals(a);
    for (std::size_t i = 0; i < a; ++i) {
      x[i] = mpq_class(num(rng), den(rng));
      // every other trial lands near the center so both signs occur
      if (trial % 2 == 0) x[i] = mpq_class(k[3 + i] - k[2], k[0]) + x[i] / 40;
      x[i].canonicalize();
      at[xs[i]] = x[i];
    }
    for (std::size_t i = 0; i < k.size(); ++i) at["k" + std::to_string(i + 1)] = k[i];
    mpq_class d2 = 0;
    for (std::size_t i = 0; i < a; ++i) {
      mpq_class c(k[3 + i] - k[2], k[0]);
      c.canonicalize();
      d2 += (x[i] - c) * (x[i] - c);
    }
    mpq_class r2(k[1], k[2]);
    r2.canonicalize();
    bool member = d2 <= r2;
    inside += member;
    bool sign = evaluate::eval_exact(forge::ball_poly(a), at) >= 0;
    if (sign != member) o.check(false, "sign at trial " + std::to_string(trial));
  }
  for (std::size_t a = 1; a <= 4; ++a) {
    Polynomial r = forge::ball_poly(a);
    Polynomial t = Polynomial::variable("t");
    std::map<std::string, Polynomial> scale;
    for (const auto& kv : forge::numbered("k", 3 + a)) scale[kv] = t * Polynomial::variable(kv);
    o.check(r.substitute(scale, false) == t * t * t * r, "homogeneity for a = " + std::to_string(a));
  }
  o.note("1000 samples, " + std::to_string(inside) + " inside");
  return o;
}

// 5. sup classification of the engineered polynomial against the case split
Outcome trichotomy() {
  Outcome o;
  const std::vector<std::string> sets{"empty", "full", "box:0,1", "box:-3/2,1/4", "boxes:-2,-1;1/2,3"};
  std::size_t agree = 0, disagree = 0, skip = 0;
  for (const auto& name : sets) {
    auto U = ce::make_preset(name, 1);
    auto g = forge::engineer(U, universal::oracle_universal(ce::build_W1(U, 1)));
    auto samples = evaluate::grid_samples(25, 1, 2024);
    for (const char* threshold : {"1000", "1000000"}) {
      evaluate::Budget b;
      b.nat_bound = 64;
      b.threshold = mpq_class(threshold);
      auto rep = evaluate::verify_trichotomy(g, *U, samples, 8, b);
      agree += rep.agreements;
      disagree += rep.disagreements;
      skip += rep.skips;
      if (rep.disagreements) o.check(false, name + " at threshold " + threshold);
    }
  }
  o.note(std::to_string(agree) + " agreements, " + std::to_string(disagree) + " disagreements, " +
         std::to_string(skip) + " skips");
  return o;
}

// 6. pairing identities, interval codes and neighborhood membership
Outcome coding_properties() {
  Outcome o;
  std::size_t tuples = 0;
  // pairN starts at arity 2
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<mpz_class> x(n, 0), back(n);
    std::vector<unsigned long> digits(n, 0);
    mpz_class code;
    bool all = true;
    while (true) {
      coding::pairN_into(x, code);
      coding::unpairN_into(code, back);
      for (std::size_t j = 0; j < n; ++j) all = all && back[j] == digits[j];
      ++tuples;
      std::size_t i = 0;
      while (i < n && digits[i] == 50) {
        digits[i] = 0;
        x[i++] = 0UL;
      }
      if (i == n) break;
      x[i] = ++digits[i];
    }
    o.check(all, "round trip on [0,50]^" + std::to_string(n));
  }

  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> num(-400, 400), den(1, 24), sec(0, 6);
  auto rational = [&] {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  std::size_t intervals = 0;
  while (intervals < 500) {
    mpq_class a = rational(), b = rational();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    auto r = std::get<coding::OpenInterval>(coding::decode_factor(coding::Factor::Real, coding::encode_interval(a, b)));
    if (r.a != a || r.b != b) o.check(false, "interval " + a.get_str() + "," + b.get_str());
    ++intervals;
  }

  std::size_t members = 0, cases = 0;
  while (cases < 10000) {
    mpq_class a = rational(), b = rational();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    int m = sec(rng), n = sec(rng);
    mpq_class x = cases % 5 == 0 ? (cases % 10 == 0 ? a : b) : rational();
    coding::NbhdCode c{coding::SpaceCode::reals_times_nat(1),
                       coding::product_index({coding::encode_interval(a, b), coding::CodeIndex(m)})};
    bool direct = a < x && x < b && n == m;
    bool got = coding::nbhd_member({x, mpq_class(n)}, c);
    if (got != direct) o.check(false, "membership case " + std::to_string(cases));
    members += direct;
    ++cases;
  }
  o.note(std::to_string(tuples) + " tuples, 500 intervals, 10000 membership cases (" + std::to_string(members) +
         " inside)");
  return o;
}

// 7. the free group, its decomposition, fixed axes and the third rotation
Outcome sphere_exactness() {
  Outcome o;
  auto f = sphere::freeness_check(8);
  o.check(f.words_at_max_len == 8748, "8748 words of length 8");
  o.check(f.identity_collisions == 0, "no identity collisions");
  o.check(f.agree, "exact and mod-5 certificates agree");
  o.check(f.non_rotations == 0, "every word a rotation");

  auto d = sphere::decomposition_check(8);
  o.check(d.ok(), "partition and paradox laws at length 8");

  std::size_t axes = 0;
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto& w : sphere::reduced_words(len)) {
      sphere::Vec3 v = sphere::to_rational(sphere::fixed_axis(w));
      if (!(sphere::word_to_matrix(w) * v == v)) o.check(false, "axis of " + w.to_string());
      ++axes;
    }

  auto sep = sphere::separation_check(50, 128, 512);
  o.check(sep.separated && sep.count == 50, "separation of 50 axes");

  auto a = sphere::alpha_matrix(128);
  auto p = sphere::imul(a, sphere::itranspose(a));
  auto det = sphere::idet(a);
  mpq_class limit(1, mpz_class(1) << 124);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) o.check(p[i][j].contains(mpq_class(i == j ? 1 : 0)), "alpha alpha^T = I");
  o.check(det.contains(mpq_class(1)), "det alpha = 1");
  o.check(sphere::max_width(p) <= limit && det.width() <= limit, "enclosure widths");

  o.note(std::to_string(f.words_checked) + " words, " + std::to_string(d.words) + " decomposed, " +
         std::to_string(axes) + " axes, separated at " + std::to_string(sep.precision) + " bits");
  return o;
}

// 8. the four-square and trigonometric transformers
Outcome transformers() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-3, 3), centre(0, 2), coin(0, 1);
  Polynomial m = Polynomial::variable("m"), n = Polynomial::variable("n");

  for (int trial = 0; trial < 50; ++trial) {
    // F(m, n) = P(m) + s (m^2 + 1)(n - a)^2 + c3 m n: every optimum over n
    // lies in [a - 1, a + 1], inside the searched naturals [0, 3]
    long c0 = c(rng), c1 = c(rng), c2 = c(rng), c3 = c(rng), a = centre(rng);
    Quantifier qn = coin(rng) ? Quantifier::Sup : Quantifier::Inf;
    Quantifier qm = coin(rng) ? Quantifier::Sup : Quantifier::Inf;
    bool nat_outer = coin(rng);
    long s = qn == Quantifier::Sup ? -1 : 1;
    Polynomial F = Polynomial(c0) + Polynomial(c1) * m + Polynomial(c2) * m * m +
                   Polynomial(s) * (m * m + 1) * (n - a) * (n - a) + Polynomial(c3) * m * n;
    expr::QuantBlock bn{qn, Domain::Nat, {"n"}}, bm{qm, Domain::Real, {"m"}};
    expr::QuantifiedExpr q(nat_outer ? std::vector<expr::QuantBlock>{bn, bm} : std::vector<expr::QuantBlock>{bm, bn},
                           {}, F);

    auto value = [&](long mv, long nv) { return c0 + c1 * mv + c2 * mv * mv + s * (mv * mv + 1) * (nv - a) * (nv - a) + c3 * mv * nv; };
    auto pick = [](Quantifier qq, long x, long y) { return qq == Quantifier::Sup ? std::max(x, y) : std::min(x, y); };
    // exhaustive: m over the grid -2..2, n over [0, 40]
    bool have_outer = false;
    long outer = 0;
    for (long u = nat_outer ? 0 : -2; u <= (nat_outer ? 40 : 2); ++u) {
      bool have_inner = false;
      long inner = 0;
      for (long v = nat_outer ? -2 : 0; v <= (nat_outer ? 2 : 40); ++v) {
        long f = nat_outer ? value(v, u) : value(u, v);
        inner = have_inner ? pick(nat_outer ? qm : qn, inner, f) : f;
        have_inner = true;
      }
      outer = have_outer ? pick(nat_outer ? qn : qm, outer, inner) : inner;
      have_outer = true;
    }

    evaluate::Budget b;
    b.nat_bound = 3;
    b.real_bound = 2;
    b.real_step = 1;
    mpq_class original = evaluate::bounded_value(q, {}, b);
    mpq_class squared = evaluate::bounded_value(forge::foursquare_transform(q), {}, b);
    if (original != outer || squared != outer)
      o.check(false, "four-square expression " + std::to_string(trial) + ": " + original.get_str() + " / " +
                         squared.get_str() + " vs " + std::to_string(outer));
  }

  std::uniform_int_distribution<int> grid(-5, 5), coef(-4, 4), wd(1, 9);
  Polynomial y = Polynomial::variable("y"), z = Polynomial::variable("z");
  for (int pt = 0; pt < 100; ++pt) {
    long g0 = coef(rng), g1 = coef(rng), g2 = coef(rng), g3 = coef(rng);
    Polynomial g = Polynomial(g0) + Polynomial(g1) * y * z + Polynomial(g2) * y * y + Polynomial(g3) * z * z * z;
    expr::QuantifiedExpr q({{Quantifier::Inf, Domain::Int, {"y"}}, {Quantifier::Sup, Domain::Int, {"z"}}}, {}, g);
    expr::NodeRef relaxed = std::get<expr::NodeRef>(forge::trig_relaxation(q).matrix());
    long yv = grid(rng), zv = grid(rng);
    mpq_class beta(wd(rng), wd(rng)), gamma(wd(rng), wd(rng));
    beta.canonicalize();
    gamma.canonicalize();
    evaluate::IntervalBox box;
    box.emplace("y", evaluate::Interval(mpq_class(yv), 128));
    box.emplace("z", evaluate::Interval(mpq_class(zv), 128));
    box.emplace("beta", evaluate::Interval(beta, 128));
    box.emplace("gamma", evaluate::Interval(gamma, 128));
    evaluate::Interval v = evaluate::interval_eval(relaxed, box);
    mpq_class exact = g0 + g1 * yv * zv + g2 * yv * yv + g3 * zv * zv * zv;
    if (!v.contains(exact) || v.width() > mpq_class(1, 1000000))
      o.check(false, "trig point " + std::to_string(pt) + " " + v.to_string());
  }
  o.note("50 expressions, 100 integer points");
  return o;
}

struct Criterion {
  const char* title;
  double bound;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"arity regression", 1, arity_regression},
      {"degree bookkeeping", 1, degree_bookkeeping},
      {"figure 1 universal", 1, figure_one},
      {"ball semantics", 10, ball_semantics},
      {"engineering trichotomy", 120, trichotomy},
      {"pairing and coding", 30, coding_properties},
      {"sphere exactness", 300, sphere_exactness},
      {"transformer equivalence", 60, transformers},
  };
  return all;
}

bool run_one(std::size_t i) {
  const Criterion& c = criteria()[i - 1];
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs < c.bound;
  if (!in_time) o.notes.push_back("runtime bound exceeded");
  bool pass = o.ok && in_time;
  std::ostringstream line;
  line << "criterion " << i << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title;
  for (const auto& n : o.notes) line << "; " << n;
  line << "  (" << std::fixed << std::setprecision(2) << secs << " s, bound " << std::setprecision(0) << c.bound
       << " s)";
  std::cout << line.str() << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::size_t which = 0;
  app.add_option("--criterion", which, "run one criterion (1-8); all when omitted")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  if (which) {
    ok = run_one(which);
  } else {
    for (std::size_t i = 1; i <= criteria().size(); ++i) ok = run_one(i) && ok;
  }
  return ok ? 0 : 1;
}
