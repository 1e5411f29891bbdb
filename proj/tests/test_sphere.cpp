#include <set>

#include <gtest/gtest.h>

#include "polyforge/error.hpp"
#include "polyforge/sphere/alpha.hpp"
#include "polyforge/sphere/axis.hpp"
#include "polyforge/sphere/classify.hpp"
#include "polyforge/sphere/freeness.hpp"
#include "polyforge/sphere/matrix.hpp"
#include "polyforge/sphere/words.hpp"

using namespace polyforge;
using namespace polyforge::sphere;

namespace {

using M = std::array<std::array<long, 3>, 3>;

// The generators scaled by 5, as plain integers.
const M kTau{{{3, 4, 0}, {-4, 3, 0}, {0, 0, 5}}};
const M kSigma{{{5, 0, 0}, {0, 3, 4}, {0, -4, 3}}};

M mul(const M& a, const M& b) {
  M r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

M transpose(const M& a) {
  M r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

M letter_matrix(char c) {
  switch (c) {
    case 't': return kTau;
    case 'T': return transpose(kTau);
    case 's': return kSigma;
    default: return transpose(kSigma);
  }
}

// every reduced word of the given length over t, T, s, S
void all_words(std::size_t len, std::string prefix, std::vector<std::string>& out) {
  if (prefix.size() == len) {
    out.push_back(prefix);
    return;
  }
  for (char c : std::string("tTsS")) {
    if (!prefix.empty()) {
      char last = prefix.back();
      if (std::tolower(last) == std::tolower(c) && last != c) continue;
    }
    all_words(len, prefix + c, out);
  }
}

}  // namespace

TEST(Generators, AreRotations) {
  for (const RatMatrix3* g : {&rho(), &phi()}) {
    EXPECT_TRUE((*g * g->transpose()).is_identity());
    EXPECT_EQ(g->det(), 1);
    EXPECT_TRUE(g->is_rotation());
  }
  EXPECT_EQ(rho().m[0][2], 0);
  EXPECT_EQ(rho().m[1][2], 0);
  EXPECT_EQ(rho().m[2][2], 1);
  EXPECT_EQ(rho().m[0][0], mpq_class(3, 5));
  EXPECT_EQ(rho().m[0][1], mpq_class(4, 5));
  EXPECT_EQ(phi().m[1][2], mpq_class(4, 5));
  EXPECT_EQ(phi().m[2][1], mpq_class(-4, 5));
}

TEST(Words, ParseAndReduce) {
  EXPECT_EQ(GroupWord::parse("tTs").to_string(), "s");
  EXPECT_EQ(GroupWord::parse("e").to_string(), "e");
  EXPECT_TRUE(GroupWord::parse("sS").is_identity());
  GroupWord w = GroupWord::parse("tsTS");
  EXPECT_TRUE((w * w.inverse()).is_identity());
}

TEST(Words, CountsMatchListing) {
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<std::string> oracle;
    all_words(len, "", oracle);
    auto words = reduced_words(len);
    EXPECT_EQ(words.size(), oracle.size());
    EXPECT_EQ(reduced_word_count(len), oracle.size());
    std::set<std::string> a(oracle.begin(), oracle.end()), b;
    for (const auto& w : words) b.insert(w.to_string());
    EXPECT_EQ(a, b);
  }
}

TEST(Words, EnumerationIsOntoShortWords) {
  std::set<std::string> seen;
  for (long n = 0; n < 1024; ++n) seen.insert(enum_word(n).to_string());
  EXPECT_EQ(enum_word(0).to_string(), "e");
  EXPECT_TRUE(seen.count("e"));
  for (std::size_t len = 1; len <= 4; ++len)
    for (const auto& w : reduced_words(len)) EXPECT_TRUE(seen.count(w.to_string())) << w.to_string();
}

TEST(Words, TauSigmaHasDenominatorTwentyFive) {
  RatMatrix3 g = word_to_matrix(GroupWord::parse("ts"));
  M oracle = mul(kTau, kSigma);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mpq_class e(oracle[i][j], 25);
      e.canonicalize();
      EXPECT_EQ(g.m[i][j], e);
    }
  EXPECT_EQ(g.m[0][1], mpq_class(12, 25));
}

TEST(Freeness, MatricesMatchPlainIntegerProducts) {
  for (std::size_t len = 1; len <= 5; ++len) {
    std::vector<std::string> words;
    all_words(len, "", words);
    for (const auto& s : words) {
      M m = letter_matrix(s[0]);
      for (std::size_t i = 1; i < s.size(); ++i) m = mul(m, letter_matrix(s[i]));
      IntMatrix3 g = word_to_int_matrix(GroupWord::parse(s));
      bool identity = true;
      long scale = 1;
      for (std::size_t i = 0; i < len; ++i) scale *= 5;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          EXPECT_EQ(g.m[i][j], m[i][j]) << s;
          identity = identity && m[i][j] == (i == j ? scale : 0);
        }
      EXPECT_FALSE(identity) << s;
    }
  }
}

TEST(Freeness, SingleLetters) {
  auto c = freeness_check(1);
  EXPECT_EQ(c.words_checked, 4u);
  EXPECT_TRUE(c.free());
}

TEST(Freeness, ThreeLetters) {
  auto c = freeness_check(3);
  EXPECT_EQ(c.words_checked, 52u);
  EXPECT_EQ(c.words_at_max_len, 36u);
  EXPECT_EQ(c.identity_collisions, 0u);
  EXPECT_EQ(c.mod5_zero, 0u);
  EXPECT_EQ(c.non_rotations, 0u);
  EXPECT_TRUE(c.free());
}

TEST(Freeness, Commutator) {
  EXPECT_FALSE(word_to_matrix(GroupWord::parse("tsTS")).is_identity());
}

TEST(Pieces, Examples) {
  EXPECT_EQ(classify_piece(GroupWord::parse("t")), 1);
  EXPECT_EQ(classify_piece(GroupWord::parse("tsS")), 1);
  EXPECT_EQ(classify_piece(GroupWord::parse("T")), 2);
  EXPECT_EQ(classify_piece(GroupWord::parse("s")), 3);
  EXPECT_EQ(classify_piece(GroupWord()), 3);
  EXPECT_EQ(classify_piece(GroupWord::parse("SSS")), 3);
  EXPECT_EQ(classify_piece(GroupWord::parse("St")), 4);
}

TEST(Pieces, DecompositionCounts) {
  auto r = decomposition_check(6);
  EXPECT_EQ(r.words, 1457u);
  // 3^0 + ... + 3^5 words start with each letter; e and S^1..S^6 join piece 3
  std::array<std::size_t, 4> expected{364, 364, 371, 358};
  EXPECT_EQ(r.piece_counts, expected);
  EXPECT_TRUE(r.ok());
}

TEST(Axes, Generators) {
  EXPECT_EQ(fixed_axis(GroupWord::parse("t")), (IntVec3{0, 0, 1}));
  EXPECT_EQ(fixed_axis(GroupWord::parse("s")), (IntVec3{1, 0, 0}));
  EXPECT_THROW(fixed_axis(GroupWord()), DegenerateKernel);
}

TEST(Axes, AreFixedByTheirWords) {
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto& w : reduced_words(len)) {
      IntVec3 a = fixed_axis(w);
      Vec3 v = to_rational(a);
      EXPECT_EQ(word_to_matrix(w) * v, v) << w.to_string();
      mpz_class g = gcd(gcd(a[0], a[1]), a[2]);
      EXPECT_EQ(g, 1) << w.to_string();
      for (const auto& c : a)
        if (c != 0) {
          EXPECT_GT(c, 0);
          break;
        }
    }
}

TEST(Axes, DistinctAxesDiffer) {
  auto axes = distinct_axes(12);
  ASSERT_EQ(axes.size(), 12u);
  for (std::size_t i = 0; i < axes.size(); ++i)
    for (std::size_t j = i + 1; j < axes.size(); ++j)
      EXPECT_FALSE(same_axis(to_rational(axes[i].axis), to_rational(axes[j].axis)));
}

TEST(Alpha, IsARotationAboutItsAxis) {
  IMatrix3 a = alpha_matrix(128);
  IMatrix3 p = imul(a, itranspose(a));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_TRUE(p[i][j].contains(mpq_class(i == j ? 1 : 0)));
  EXPECT_TRUE(idet(a).contains(mpq_class(1)));
  IVec3 axis = alpha_axis(128);
  IVec3 image = imul(a, axis);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(image[i].overlaps(axis[i]));
  EXPECT_LE(max_width(a), mpq_class(1, mpz_class(1) << 124));
}

TEST(Alpha, SeparatesTheFirstAxes) {
  auto c = separation_check(2);
  EXPECT_TRUE(c.separated);
  ASSERT_EQ(c.products.size(), 2u);
  EXPECT_FALSE(c.products[0].overlaps(c.products[1]));
}

TEST(Classify, FixedPointOfTau) {
  MockTransversal t;
  auto r = piece16_classify({0, 0, 1}, 1000, t);
  EXPECT_EQ(r.in_d_star, Membership::Yes);
  ASSERT_TRUE(r.piece.has_value());
  EXPECT_GE(*r.piece, 1);
  EXPECT_LE(*r.piece, 16);
}

TEST(Classify, EquatorPointStaysUnknown) {
  MockTransversal t;
  auto r = piece16_classify({mpq_class(3, 5), mpq_class(4, 5), 0}, 1000, t);
  EXPECT_EQ(r.in_d_star, Membership::Unknown);
  EXPECT_FALSE(r.piece.has_value());
  EXPECT_GE(r.a_index, 1);
  EXPECT_LE(r.a_index, 4);
}

TEST(Classify, Deterministic) {
  MockTransversal t;
  Vec3 x{mpq_class(2, 3), mpq_class(1, 3), mpq_class(2, 3)};
  auto a = piece16_classify(x, 500, t);
  auto b = piece16_classify(x, 500, t);
  EXPECT_EQ(a.choice.word, b.choice.word);
  EXPECT_EQ(a.choice.representative, b.choice.representative);
  EXPECT_EQ(a.a_index, b.a_index);
}

TEST(Classify, OffTheSphere) {
  MockTransversal t;
  EXPECT_THROW(piece16_classify({1, 1, 0}, 10, t), NotOnSphere);
}
