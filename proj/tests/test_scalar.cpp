#include <gtest/gtest.h>

#include "brb/brb.hpp"
#include "brb/random.hpp"
#include "brb/verify.hpp"

using namespace brb;

namespace {

AlgebraElement L(std::string_view text) { return parse_algebra_element(text, BasisKind::Laurent); }
AlgebraElement S(std::string_view text) { return parse_algebra_element(text, BasisKind::FreeCommutative); }

}  // namespace

TEST(Rational, LowestTerms) {
  EXPECT_EQ(to_string(L("6/4").coefficient(Monomial::laurent(0))), "3/2");
  EXPECT_EQ(to_string(L("-2/4")), "-1/2");
  EXPECT_EQ(to_string(L("0/7 + e")), "e");
}

TEST(AlgebraElement, AddExamples) {
  EXPECT_EQ(alg_add(L("e + 1"), L("-e")), L("1"));
  const AlgebraElement x = L("-1/2*e^-2 + 3 + e");
  EXPECT_EQ(alg_add(x, AlgebraElement::zero(BasisKind::Laurent)), x);
  EXPECT_EQ(alg_add(L("e^-1"), L("2*e^-1")), L("3*e^-1"));
  EXPECT_TRUE(alg_add(L("e"), L("-e")).is_zero());
}

TEST(AlgebraElement, MulExamples) {
  EXPECT_EQ(alg_mul(L("e^-1"), L("e")), L("1"));
  const AlgebraElement ab = alg_mul(S("a"), S("b"));
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab.terms().begin()->first, Monomial::symbols({"b", "a"}));
  EXPECT_EQ(alg_mul(L("1 + e"), L("1 - e")), L("1 - e^2"));
  EXPECT_EQ(power(L("1 + e"), 2), L("1 + 2*e + e^2"));
}

TEST(AlgebraElement, KindMismatchThrows) {
  EXPECT_THROW(alg_add(L("e"), S("a")), BasisMismatch);
  EXPECT_THROW(alg_mul(L("e"), S("a")), BasisMismatch);
}

TEST(AlgebraElement, RenderingIsSortedByExponent) {
  const AlgebraElement x = L("e + 3 - 1/2*e^-2");
  EXPECT_EQ(to_string(x), "-1/2*e^-2 + 3 + e");
  EXPECT_EQ(L(to_string(x)), x);
  EXPECT_EQ(to_string(AlgebraElement::zero(BasisKind::Laurent)), "0");
  EXPECT_EQ(to_string(S("b*a^2 - 3 + a")), "-3 + a + a^2*b");
}

TEST(AlgebraElement, ParserAcceptsVariants) {
  EXPECT_EQ(L("eps^(-2)"), L("e^-2"));
  EXPECT_EQ(L(" 3/6 * e "), L("1/2*e"));
  EXPECT_EQ(L("-e^-1 + e^-1"), AlgebraElement::zero(BasisKind::Laurent));
  EXPECT_EQ(L("2*e*e^-3"), L("2*e^-2"));
  EXPECT_EQ(S("x*y*x"), S("x^2*y"));
}

TEST(AlgebraElement, ParseErrorsCarryColumn) {
  try {
    L("e^-1 +* 2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 6u);
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
  }
  EXPECT_THROW(L("x"), ParseError);
  EXPECT_THROW(L("1/0"), ParseError);
  EXPECT_THROW(L("e^"), ParseError);
  EXPECT_THROW(L(""), ParseError);
}

TEST(RotaBaxter, MinusExamples) {
  const auto pole = RotaBaxterSplit::pole_part();
  EXPECT_EQ(rb_minus(pole, L("e^-2 + 3 + e")), L("e^-2"));
  EXPECT_TRUE(rb_minus(pole, L("1 + e")).is_zero());
  EXPECT_TRUE(rb_minus(RotaBaxterSplit::trivial_plus(), L("e^-2 + e")).is_zero());
}

TEST(RotaBaxter, PlusExamples) {
  const auto pole = RotaBaxterSplit::pole_part();
  EXPECT_EQ(rb_plus(pole, L("e^-2 + 3 + e")), L("3 + e"));
  EXPECT_TRUE(rb_plus(pole, L("e^-1")).is_zero());
  EXPECT_EQ(rb_plus(RotaBaxterSplit::trivial_plus(), L("e^-2 + e")), L("e^-2 + e"));
}

TEST(RotaBaxter, PoleSplitRejectsSymbolicElements) {
  EXPECT_THROW(rb_minus(RotaBaxterSplit::pole_part(), S("a")), BasisMismatch);
  EXPECT_TRUE(rb_minus(RotaBaxterSplit::trivial_plus(), S("a")).is_zero());
}

TEST(RotaBaxter, IdentityExamples) {
  const auto pole = RotaBaxterSplit::pole_part();
  EXPECT_TRUE(rb_identity_check(pole, L("e^-1"), L("e")));
  EXPECT_TRUE(rb_identity_check(pole, AlgebraElement::zero(BasisKind::Laurent), L("e^-3 + 2 + e")));
}

TEST(RotaBaxter, IdentityOnRandomPairs) {
  const auto r = verify::rb_identity(2024, 1000);
  EXPECT_TRUE(r.passed) << r.counterexample;
}

TEST(RotaBaxter, ProjectorAndClosureLaws) {
  const auto r = verify::rb_projector(2024, 500);
  EXPECT_TRUE(r.passed) << r.counterexample;
}

TEST(AlgebraElement, RingAxiomsOnRandomTriples) {
  Random rng(11);
  for (int t = 0; t < 200; ++t) {
    const AlgebraElement x = rng.laurent(), y = rng.laurent(), z = rng.laurent();
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x * (y + z), x * y + x * z);
  }
}
