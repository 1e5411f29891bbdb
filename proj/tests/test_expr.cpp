#include <random>

#include <gtest/gtest.h>

#include "polyforge/error.hpp"
#include "polyforge/expr/emit.hpp"
#include "polyforge/expr/infix.hpp"
#include "polyforge/universal/universal.hpp"

using namespace polyforge;
using namespace polyforge::expr;

namespace {

// A polynomial in x, y, z held as (coefficient, exponents) rows and
// evaluated by repeated multiplication.
struct RawPoly {
  std::vector<std::pair<long, std::array<unsigned, 3>>> rows;

  mpq_class at(const std::array<mpq_class, 3>& v) const {
    mpq_class sum = 0;
    for (const auto& [c, e] : rows) {
      mpq_class t = c;
      for (int i = 0; i < 3; ++i)
        for (unsigned j = 0; j < e[i]; ++j) t *= v[i];
      sum += t;
    }
    return sum;
  }

  Polynomial build() const {
    static const char* names[] = {"x", "y", "z"};
    Polynomial p;
    for (const auto& [c, e] : rows) {
      Polynomial t(c);
      for (int i = 0; i < 3; ++i)
        if (e[i]) t *= Polynomial::variable(names[i]).pow(e[i]);
      p += t;
    }
    return p;
  }
};

RawPoly random_raw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), coef(-5, 5), ex(0, 3);
  RawPoly r;
  int n = terms(rng);
  for (int i = 0; i < n; ++i) r.rows.push_back({coef(rng), {unsigned(ex(rng)), unsigned(ex(rng)), unsigned(ex(rng))}});
  return r;
}

std::array<mpq_class, 3> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  std::array<mpq_class, 3> v;
  for (auto& c : v) {
    c = mpq_class(num(rng), den(rng));
    c.canonicalize();
  }
  return v;
}

std::map<std::string, mpq_class> assign(const std::array<mpq_class, 3>& v) {
  return {{"x", v[0]}, {"y", v[1]}, {"z", v[2]}};
}

}  // namespace

TEST(Degree, ZeroPolynomialIsMinusInfinity) {
  EXPECT_TRUE(Polynomial().degree().is_minus_infinity());
  EXPECT_EQ(Polynomial(0).degree(), Degree::minus_infinity());
}

TEST(Degree, MaximumOverMonomials) {
  Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
  EXPECT_EQ((x * x * y + Polynomial(3) * x).degree(), Degree(3));
}

TEST(Degree, DagDegreeWithoutExpansion) {
  DagBuilder b;
  NodeRef e = b.pow(b.add(b.var("x"), b.constant(1)), mpz_class("1000000000000"));
  EXPECT_EQ(degree(e), Degree(mpz_class("1000000000000")));
}

TEST(Polynomial, ArithmeticMatchesPointwiseEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    RawPoly a = random_raw(rng), c = random_raw(rng);
    Polynomial pa = a.build(), pc = c.build();
    auto v = random_point(rng);
    auto at = assign(v);
    EXPECT_EQ((pa + pc).evaluate(at), a.at(v) + c.at(v));
    EXPECT_EQ((pa - pc).evaluate(at), a.at(v) - c.at(v));
    EXPECT_EQ((pa * pc).evaluate(at), a.at(v) * c.at(v));
    mpq_class sq = a.at(v) * a.at(v);
    EXPECT_EQ(pa.pow(2).evaluate(at), sq);
  }
}

TEST(Polynomial, CancellationLeavesZero) {
  Polynomial x = Polynomial::variable("x");
  Polynomial p = (x + 1) * (x - 1) - (x * x - 1);
  EXPECT_TRUE(p.is_zero());
}

TEST(Polynomial, UnboundVariable) {
  Polynomial x = Polynomial::variable("x");
  EXPECT_THROW(x.evaluate({}), UnboundVariable);
}

TEST(Expand, Binomial) {
  DagBuilder b;
  Polynomial x = Polynomial::variable("x");
  EXPECT_EQ(expand(b.square(b.add(b.var("x"), b.constant(1))), 10), x * x + Polynomial(2) * x + 1);
}

TEST(Expand, Constant) {
  DagBuilder b;
  EXPECT_EQ(expand(b.constant(17), 1), Polynomial(17));
}

TEST(Expand, FigureOneExceedsAnyDeskBudget) {
  EXPECT_THROW(expand(universal::jones_figure1(), 1000000), BudgetExceeded);
}

TEST(Expand, AgreesWithDagEvaluation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RawPoly a = random_raw(rng), c = random_raw(rng);
    DagBuilder b;
    NodeRef e = b.mul(b.from_polynomial(a.build()), b.add(b.from_polynomial(c.build()), b.constant(2)));
    auto v = random_point(rng);
    EXPECT_EQ(expand(e, 10000).evaluate(assign(v)), a.at(v) * (c.at(v) + 2));
  }
}

TEST(Substitute, ShiftSquares) {
  Polynomial x = Polynomial::variable("x");
  EXPECT_EQ((x * x).substitute({{"x", x + 1}}), x * x + Polynomial(2) * x + 1);
}

TEST(Substitute, PartialBinding) {
  Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
  EXPECT_EQ((x * y).substitute({{"x", Polynomial(2)}}, false), Polynomial(2) * y);
}

TEST(Substitute, PairingAtOrigin) {
  Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
  Polynomial j2 = (x + y) * (x + y + 1) + Polynomial(2) * y;
  EXPECT_TRUE(j2.substitute({{"x", Polynomial(0)}, {"y", Polynomial(0)}}).is_zero());
}

TEST(Substitute, DagUnknownVariableIsRejected) {
  DagBuilder b;
  NodeRef e = b.var("x");
  EXPECT_THROW(substitute(e, std::map<std::string, Polynomial>{{"w", Polynomial(1)}}, b), UnknownVariable);
}

TEST(Infix, ParsesAndEvaluates) {
  DagBuilder b;
  NodeRef e = parse_infix("2x^2 - (y+1)*[x - 3] + 5^2", b);
  Polynomial p = expand(e, 100);
  EXPECT_EQ(p.evaluate({{"x", 3}, {"y", 4}}), mpq_class(2 * 9 - 5 * 0 + 25));
}

TEST(Infix, ConstantExponentExpressions) {
  DagBuilder b;
  NodeRef e = parse_infix("x^(5^60)", b);
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 5, 60);
  EXPECT_EQ(degree(e), Degree(d));
}

TEST(Infix, Errors) {
  DagBuilder b;
  EXPECT_THROW(parse_infix("x +", b), ParseError);
  EXPECT_THROW(parse_infix("(x", b), ParseError);
  EXPECT_THROW(parse_infix("x ^ y", b), ParseError);
}

TEST(Emit, SimplestPrefix) {
  QuantifiedExpr q({{Quantifier::Inf, Domain::Nat, {"n"}}}, {}, Polynomial::variable("n"));
  EXPECT_EQ(emit(q, Format::Text), "inf_{n in N} [ n ]");
}

TEST(Emit, CompressedRuns) {
  std::vector<std::string> ks;
  for (int i = 1; i <= 70; ++i) ks.push_back("k" + std::to_string(i));
  EXPECT_EQ(compress_vars(ks), "k1..k70");
  EXPECT_EQ(compress_vars({"y"}), "y");
}

TEST(Emit, JsonRoundTripOnRandomExpressions) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 2), coin(0, 1);
  const Domain doms[] = {Domain::Nat, Domain::Int, Domain::Real};
  for (int trial = 0; trial < 100; ++trial) {
    RawPoly r = random_raw(rng);
    std::vector<QuantBlock> prefix;
    std::vector<std::string> free;
    // x bound or free, y bound, z free
    if (coin(rng))
      prefix.push_back({coin(rng) ? Quantifier::Sup : Quantifier::Inf, doms[pick(rng)], {"x"}});
    else
      free.push_back("x");
    prefix.push_back({coin(rng) ? Quantifier::Sup : Quantifier::Inf, doms[pick(rng)], {"y"}});
    free.push_back("z");
    Matrix m;
    if (coin(rng)) {
      m = r.build();
    } else {
      DagBuilder b;
      m = b.add(b.from_polynomial(r.build()), b.sinpi(b.var("y")));
    }
    QuantifiedExpr q(prefix, free, m);
    QuantifiedExpr back = parse_json(emit(q, Format::Json));
    EXPECT_TRUE(back == q) << emit(q, Format::Text);
  }
}

TEST(Emit, JsonParseErrors) {
  EXPECT_THROW(parse_json("{"), ParseError);
  EXPECT_THROW(parse_json("{\"prefix\": 3}"), ParseError);
}

TEST(Quantified, VariableInTwoBlocksIsMalformed) {
  EXPECT_THROW(QuantifiedExpr({{Quantifier::Inf, Domain::Nat, {"n"}}, {Quantifier::Sup, Domain::Nat, {"n"}}}, {},
                              Polynomial::variable("n")),
               MalformedExpression);
}

TEST(Quantified, UndeclaredMatrixVariableIsMalformed) {
  EXPECT_THROW(QuantifiedExpr({{Quantifier::Inf, Domain::Nat, {"n"}}}, {}, Polynomial::variable("m")),
               MalformedExpression);
}

TEST(Quantified, ArityReport) {
  QuantifiedExpr q({{Quantifier::Inf, Domain::Real, {"y"}}, {Quantifier::Sup, Domain::Nat, {"k1", "k2"}}}, {"x"},
                   Polynomial::variable("x") * Polynomial::variable("k1") * Polynomial::variable("k2"));
  auto a = q.arity();
  EXPECT_EQ(a.free_count, 1u);
  EXPECT_EQ(a.block_sizes, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(a.var_count, 4u);
  EXPECT_EQ(a.degree, Degree(3));
  EXPECT_EQ(a.signature, "inf_R(y) sup_N(k1,k2)");
}
