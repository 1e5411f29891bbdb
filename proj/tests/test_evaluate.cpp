#include <random>

#include <gtest/gtest.h>

#include "polyforge/ce/presets.hpp"
#include "polyforge/ce/w1.hpp"
#include "polyforge/error.hpp"
#include "polyforge/evaluate/engineered.hpp"
#include "polyforge/evaluate/exact.hpp"
#include "polyforge/evaluate/interval.hpp"
#include "polyforge/forge/ball.hpp"

using namespace polyforge;
using namespace polyforge::evaluate;
using expr::DagBuilder;
using expr::Domain;
using expr::NodeRef;
using expr::Polynomial;
using expr::Quantifier;
using Kind = ExtRealClass::Kind;

namespace {

forge::Engineered built_on(const std::string& set, std::size_t a = 1) {
  auto U = ce::make_preset(set, a);
  return forge::engineer(U, universal::oracle_universal(ce::build_W1(U, a)));
}

Budget tight() {
  Budget b;
  b.nat_bound = 64;
  b.threshold = 1000000;
  return b;
}

NodeRef random_dag(std::mt19937_64& rng, DagBuilder& b, int depth) {
  std::uniform_int_distribution<int> pick(0, 5), c(-3, 3);
  static const char* names[] = {"x", "y"};
  if (depth == 0) return pick(rng) < 2 ? b.constant(c(rng)) : b.var(names[rng() % 2]);
  switch (pick(rng)) {
    case 0: return b.add(random_dag(rng, b, depth - 1), random_dag(rng, b, depth - 1));
    case 1: return b.sub(random_dag(rng, b, depth - 1), random_dag(rng, b, depth - 1));
    case 2: return b.mul(random_dag(rng, b, depth - 1), random_dag(rng, b, depth - 1));
    case 3: return b.square(random_dag(rng, b, depth - 1));
    case 4: return b.sinpi(random_dag(rng, b, depth - 1));
    default: return random_dag(rng, b, depth - 1);
  }
}

}  // namespace

TEST(Exact, Examples) {
  Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
  EXPECT_EQ(eval_exact(x * x + y, {{"x", mpq_class(1, 2)}, {"y", 1}}), mpq_class(5, 4));
  EXPECT_EQ(eval_exact(forge::pair2_poly(x, y), {{"x", 1}, {"y", 0}}), 2);
  Assignment at{{"x", mpq_class(1, 2)}, {"k1", 1}, {"k2", 1}, {"k3", 1}, {"k4", 1}};
  EXPECT_EQ(eval_exact(forge::ball_poly(1), at), mpq_class(3, 4));
}

TEST(Exact, UnboundVariable) {
  EXPECT_THROW(eval_exact(Polynomial::variable("x"), {}), UnboundVariable);
}

TEST(Exact, HugePowersOfUnits) {
  DagBuilder b;
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), 5, 60);
  NodeRef t = b.pow(b.var("x"), e);
  EXPECT_EQ(eval_exact(t, {{"x", -1}}), -1);
  EXPECT_EQ(eval_exact(t, {{"x", 0}}), 0);
  EXPECT_THROW(eval_exact(t, {{"x", 2}}), BudgetExceeded);
}

TEST(Exact, SinPiRational) {
  for (int num = -24; num <= 24; ++num) {
    mpq_class r(num, 12);
    r.canonicalize();
    auto s = sinpi_rational(r);
    mpq_class six = r * 6;
    // (6r mod 12) indexes the values at multiples of pi/6
    static const mpq_class table[12] = {0, mpq_class(1, 2), 1, 1, 1, mpq_class(1, 2),
                                        0, mpq_class(-1, 2), -1, -1, -1, mpq_class(-1, 2)};
    static const bool rational_at[12] = {true, true, false, true, false, true,
                                         true, true, false, true, false, true};
    long k = six.get_den() == 1 ? ((six.get_num().get_si() % 12) + 12) % 12 : -1;
    EXPECT_EQ(s.has_value(), k >= 0 && rational_at[k]) << r;
    if (!s) continue;
    EXPECT_EQ(*s, table[k]) << r;
  }
}

TEST(Search, ExactMaximum) {
  expr::QuantifiedExpr q({{Quantifier::Sup, Domain::Nat, {"k"}}}, {},
                         Polynomial(1) - (Polynomial::variable("k") - 3).pow(2));
  Budget b;
  EXPECT_EQ(sup_inf_eval(q, {}, b).kind, Kind::ValueOne);
  EXPECT_EQ(bounded_value(q, {}, b), 1);
}

TEST(Search, DivergentSupremum) {
  expr::QuantifiedExpr q({{Quantifier::Sup, Domain::Nat, {"k"}}}, {}, Polynomial::variable("k"));
  Budget b;
  EXPECT_EQ(sup_inf_eval(q, {}, b).kind, Kind::LowerBoundSoFar);
  b.nat_bound = 2000;
  EXPECT_EQ(sup_inf_eval(q, {}, b).kind, Kind::ExceedsThreshold);
}

TEST(Search, InfimumAtZero) {
  expr::QuantifiedExpr q({{Quantifier::Inf, Domain::Nat, {"n"}}}, {}, Polynomial::variable("n"));
  EXPECT_EQ(sup_inf_eval(q, {}, Budget{}).kind, Kind::ValueZero);
}

TEST(Search, FreeVariablesMustBeAssigned) {
  expr::QuantifiedExpr q({{Quantifier::Inf, Domain::Nat, {"n"}}}, {"x"},
                         Polynomial::variable("n") + Polynomial::variable("x"));
  EXPECT_THROW(sup_inf_eval(q, {}, Budget{}), AssignmentMismatch);
  EXPECT_EQ(sup_inf_eval(q, {{"x", 1}}, Budget{}).kind, Kind::ValueOne);
}

TEST(Search, BudgetValidation) {
  Budget b;
  b.nat_bound = 0;
  EXPECT_THROW(b.validate(), std::invalid_argument);
}

TEST(Engineered, SectionZeroIsOne) {
  auto g = built_on("empty");
  EXPECT_EQ(engineered_sup(g, {mpq_class(1, 2)}, 0, tight()).cls.kind, Kind::ValueOne);
}

TEST(Engineered, EmptySetGivesZero) {
  auto g = built_on("empty");
  for (long n : {1, 3, 7}) EXPECT_EQ(engineered_sup(g, {0}, n, tight()).cls.kind, Kind::ValueZero);
}

TEST(Engineered, FullSetDiverges) {
  auto g = built_on("full");
  auto v = engineered_sup(g, {2}, 5, tight());
  EXPECT_EQ(v.cls.kind, Kind::ExceedsThreshold);
  EXPECT_TRUE(v.growth_in_t);
  ASSERT_FALSE(v.witness.empty());
  // the reported value is p itself at the witness
  EXPECT_EQ(engineered_value(g, {2}, 5, v.witness), v.best);
}

TEST(Engineered, RejectedCodesAreNotPositive) {
  auto g = built_on("empty");
  std::mt19937_64 rng(5);
  // each rejection exhausts the oracle budget, so only a few codes
  std::uniform_int_distribution<int> d(0, 3);
  for (int t = 0; t < 5; ++t) {
    std::vector<mpz_class> k{d(rng) + 1, d(rng), d(rng) + 1, d(rng)};
    EXPECT_LE(engineered_value(g, {mpq_class(1, 2)}, 1 + t % 4, k), 0);
  }
}

TEST(Engineered, SymbolicIsEvaluationOnly) {
  auto g = forge::engineer_symbolic(1, universal::jones58());
  EXPECT_THROW(engineered_sup(g, {0}, 1, tight()), EvaluationOnly);
}

TEST(Engineered, IndicatorInfimum) {
  auto U = ce::make_preset("full", 1);
  auto ind = forge::pi02_indicator(ce::Pi02Spec(U, 1), universal::oracle_universal(ce::build_W1(U, 1)));
  EXPECT_EQ(sup_inf_eval(ind, {1}, tight(), 4).kind, Kind::ValueOne);
  auto E = ce::make_preset("empty", 1);
  auto ind0 = forge::pi02_indicator(ce::Pi02Spec(E, 1), universal::oracle_universal(ce::build_W1(E, 1)));
  EXPECT_EQ(sup_inf_eval(ind0, {1}, tight(), 4).kind, Kind::ValueZero);
}

TEST(Engineered, TrichotomyOnABox) {
  auto U = ce::make_preset("box:-1,1", 1);
  auto g = forge::engineer(U, universal::oracle_universal(ce::build_W1(U, 1)));
  auto rep = verify_trichotomy(g, *U, grid_samples(6, 1, 7), 4, tight());
  EXPECT_EQ(rep.disagreements, 0u);
  EXPECT_GT(rep.agreements, 0u);
}

TEST(Engineered, GridSamplesAreDeterministic) {
  auto s = grid_samples(20, 2, 99);
  EXPECT_EQ(s, grid_samples(20, 2, 99));
  for (const auto& p : s) {
    ASSERT_EQ(p.size(), 2u);
    for (const auto& c : p) {
      EXPECT_LE(abs(c), 3);
      EXPECT_TRUE(c.get_den() == 1 || c.get_den() == 2 || c.get_den() == 4);
    }
  }
}

TEST(Interval, SquareOnASpan) {
  DagBuilder b;
  IntervalBox box;
  box.emplace("x", Interval(mpq_class(-1), mpq_class(2), 128));
  Interval r = interval_eval(b.square(b.var("x")), box);
  EXPECT_EQ(r.lo_q(), 0);
  EXPECT_EQ(r.hi_q(), 4);
}

TEST(Interval, SinPiAtOne) {
  DagBuilder b;
  IntervalBox box;
  box.emplace("x", Interval(mpq_class(1), 128));
  Interval r = interval_eval(b.sinpi(b.var("x")), box);
  EXPECT_TRUE(r.contains(mpq_class(0)));
  EXPECT_LT(r.width(), mpq_class(1, 1000000000));
}

TEST(Interval, EnclosesExactValuesOfRandomExpressions) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-12, 12);
  for (int t = 0; t < 300; ++t) {
    DagBuilder b;
    NodeRef e = random_dag(rng, b, 4);
    // sines are rational only at some multiples of 1/6
    mpq_class x(num(rng), 6), y(num(rng), 6);
    x.canonicalize();
    y.canonicalize();
    mpq_class exact;
    try {
      exact = eval_exact(e, {{"x", x}, {"y", y}});
    } catch (const EvaluationOnly&) {
      continue;
    }
    IntervalBox point;
    point.emplace("x", Interval(x, 128));
    point.emplace("y", Interval(y, 128));
    EXPECT_TRUE(interval_eval(e, point).contains(exact));
    // a surrounding box encloses the point enclosure
    IntervalBox wide;
    wide.emplace("x", Interval(x - mpq_class(1, 7), x + mpq_class(1, 9), 128));
    wide.emplace("y", Interval(y - mpq_class(1, 5), y + mpq_class(1, 3), 128));
    EXPECT_TRUE(interval_eval(e, wide).contains(exact));
  }
}

TEST(Interval, DivisionByAnIntervalAroundZero) {
  Interval a(mpq_class(1), 64), z(mpq_class(-1), mpq_class(1), 64);
  EXPECT_THROW(a / z, std::domain_error);
}
