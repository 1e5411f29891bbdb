#include <chrono>
#include <set>

#include <gtest/gtest.h>

#include "polyforge/ce/presets.hpp"
#include "polyforge/ce/w1.hpp"
#include "polyforge/coding/pairing.hpp"
#include "polyforge/error.hpp"
#include "polyforge/evaluate/exact.hpp"
#include "polyforge/universal/universal.hpp"

using namespace polyforge;
using namespace polyforge::universal;
using expr::NodeRef;
using expr::Op;

namespace {

mpz_class five_pow(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 5, e);
  return r;
}

void collect(const NodeRef& e, std::set<const expr::Node*>& seen, std::vector<NodeRef>& out) {
  if (!seen.insert(e.get()).second) return;
  out.push_back(e);
  for (const auto& a : e->args) collect(a, seen, out);
}

}  // namespace

TEST(Figure1, DegreeAndUnknowns) {
  auto start = std::chrono::steady_clock::now();
  NodeRef f = jones_figure1();
  EXPECT_EQ(expr::degree(f), expr::Degree(2 * five_pow(60)));
  std::set<std::string> xs;
  for (const auto& v : expr::variables(f))
    if (v[0] == 'x') xs.insert(v);
  EXPECT_EQ(xs.size(), 28u);
  EXPECT_EQ(jones28()->nu(), 28u);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
}

TEST(Figure1, ArgumentsAndParameters) {
  auto vars = expr::variables(jones_figure1());
  for (const char* v : {"n", "m1", "m2", "m3"}) EXPECT_TRUE(vars.count(v)) << v;
  EXPECT_EQ(vars.size(), 32u);
  EXPECT_EQ(jones28()->argument(), "n");
  EXPECT_EQ(jones28()->params(), (std::vector<std::string>{"m1", "m2", "m3"}));
}

TEST(Figure1, SumOfSquares) {
  NodeRef f = jones_figure1();
  ASSERT_EQ(f->op, Op::Add);
  EXPECT_GT(f->args.size(), 10u);
  for (const auto& s : f->args) {
    ASSERT_EQ(s->op, Op::Pow);
    EXPECT_EQ(s->value, 2);
  }
}

TEST(Figure1, SharedTowerNode) {
  std::set<const expr::Node*> seen;
  std::vector<NodeRef> nodes;
  collect(jones_figure1(), seen, nodes);
  std::size_t towers = 0;
  for (const auto& n : nodes)
    if (n->op == Op::Pow && n->value == five_pow(60) && n->args[0]->op == Op::Var && n->args[0]->name == "x5")
      ++towers;
  EXPECT_EQ(towers, 1u);
}

TEST(Figure1, TranscriptionChecksum) {
  EXPECT_EQ(fnv1a64(jones_figure1_text()), kJonesFigure1Checksum);
}

TEST(Metadata, PublishedRecords) {
  std::vector<JonesRecord> expected{{58, 4}, {28, 2 * five_pow(60)}, {9, 47216 * five_pow(58) + 9728}};
  EXPECT_EQ(jones_meta(), expected);
  EXPECT_EQ(jones58()->nu(), 58u);
  EXPECT_EQ(jones58()->delta(), expr::Degree(4));
  EXPECT_EQ(jones9()->delta(), expr::Degree(47216 * five_pow(58) + 9728));
  EXPECT_FALSE(jones58()->has_body());
  EXPECT_TRUE(jones28()->has_body());
}

TEST(Metadata, OnlyOraclesEvaluate) {
  EXPECT_THROW(jones58()->call({0}), EvaluationOnly);
  EXPECT_THROW(jones28()->call({}), EvaluationOnly);
}

TEST(Shift, Examples) {
  expr::DagBuilder b;
  NodeRef sq = b.square(b.var("x"));
  expr::Polynomial x = expr::Polynomial::variable("x");
  EXPECT_EQ(expr::expand(shift_one_based(sq, {"x"}, b), 10), (x + 1) * (x + 1));
  NodeRef c = b.constant(9);
  EXPECT_TRUE(expr::structurally_equal(shift_one_based(c, {}, b), c));
  EXPECT_THROW(shift_one_based(sq, {"w"}, b), UnknownVariable);
}

TEST(Shift, FigureOneDegreePreserved) {
  expr::DagBuilder b;
  NodeRef f = b.import(jones_figure1());
  std::vector<std::string> unknowns = jones28()->unknowns();
  EXPECT_EQ(expr::degree(shift_one_based(f, unknowns, b)), expr::Degree(2 * five_pow(60)));
}

TEST(Shift, ShiftedValueIsOriginalAtPlusOne) {
  expr::DagBuilder b;
  NodeRef e = b.add(b.mul(b.var("x"), b.square(b.var("y"))), b.var("z"));
  NodeRef s = shift_one_based(e, {"x", "y"}, b);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      EXPECT_EQ(evaluate::eval_exact(s, {{"x", x}, {"y", y}, {"z", 5}}),
                evaluate::eval_exact(e, {{"x", x + 1}, {"y", y + 1}, {"z", 5}}));
}

TEST(Oracle, Evens) {
  auto q = oracle_universal(ce::evens());
  EXPECT_EQ(q->nu(), 0u);
  EXPECT_TRUE(q->solvable(4));
  EXPECT_FALSE(q->solvable(3));
  EXPECT_EQ(q->call({4}), 0);
  EXPECT_EQ(q->call({3}), 1);
  EXPECT_TRUE(q->evaluation_only());
}

TEST(Oracle, ConditionOneCodes) {
  auto w = ce::build_W1(ce::make_preset("empty", 1), 1);
  auto q = oracle_universal(w);
  EXPECT_TRUE(q->solvable(coding::pairN({0, 1, 1, 0, 0})));
  EXPECT_TRUE(q->solvable(coding::pairN({0, 1, 1, 0, 9})));
  EXPECT_FALSE(q->solvable(coding::pairN({0, 1, 0, 0, 0})));
}

TEST(Oracle, ResolverKnowsTheNamedInstances) {
  EXPECT_EQ(resolve_universal("jones58")->name(), "jones58");
  EXPECT_EQ(resolve_universal("jones28")->unknown_count(), 28u);
}
