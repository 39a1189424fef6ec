#include <gtest/gtest.h>

#include "brb/brb.hpp"
#include "brb/random.hpp"
#include "brb/verify.hpp"

using namespace brb;

namespace {

AlgebraElement L(std::string_view text) { return parse_algebra_element(text, BasisKind::Laurent); }
AlgebraElement S(std::string_view text) { return parse_algebra_element(text, BasisKind::FreeCommutative); }

FormalDiffeo symbolic(int order, std::map<int, std::string> coefficients) {
  std::map<int, AlgebraElement> c;
  for (const auto& [n, text] : coefficients) c.emplace(n, S(text));
  return FormalDiffeo(order, std::move(c), BasisKind::FreeCommutative);
}

const RotaBaxterSplit pole = RotaBaxterSplit::pole_part();

}  // namespace

TEST(Diffeo, ComposeQuadratics) {
  // (x + a x^2) o (x + b x^2) = x + (a + b) x^2 + 2ab x^3
  const FormalDiffeo fg = compose(symbolic(3, {{2, "a"}}), symbolic(3, {{2, "b"}}));
  EXPECT_EQ(fg, symbolic(3, {{2, "a + b"}, {3, "2*a*b"}}));
}

TEST(Diffeo, InverseOfQuadratic) {
  // Catalan numbers up to sign
  const FormalDiffeo f = symbolic(4, {{2, "a"}});
  EXPECT_EQ(compositional_inverse(f), symbolic(4, {{2, "-a"}, {3, "2*a^2"}, {4, "-5*a^3"}}));
  EXPECT_EQ(compose(f, compositional_inverse(f)), FormalDiffeo::identity(4, BasisKind::FreeCommutative));
}

TEST(Diffeo, RejectsBadInput) {
  EXPECT_THROW(FormalDiffeo(3, {{4, L("1")}}), TruncationError);
  EXPECT_THROW(FormalDiffeo(3, {{1, L("1")}}), TruncationError);
  EXPECT_THROW(FormalDiffeo(0, {}), Error);
  EXPECT_THROW(FormalDiffeo(3, {{2, S("a")}}), BasisMismatch);
  EXPECT_THROW(compose(FormalDiffeo::identity(3), FormalDiffeo::identity(4)), TruncationError);
  EXPECT_THROW(diffeo_to_character(FormalDiffeo::identity(5), faa_di_bruno_spec(3)), TruncationError);
  EXPECT_THROW(diffeo_to_character(FormalDiffeo::identity(3), ladder_spec(3)), SpecMismatch);
}

TEST(Diffeo, IdentityIsTheUnitCharacter) {
  const auto spec = faa_di_bruno_spec(4);
  EXPECT_EQ(diffeo_to_character(FormalDiffeo::identity(5), spec).to_map(), convolution_unit(spec, BasisKind::Laurent));
}

TEST(Diffeo, CharacterRoundTrip) {
  Random rng(21);
  for (int t = 0; t < 10; ++t) {
    const FormalDiffeo f = rng.diffeo(6);
    EXPECT_EQ(character_to_diffeo(diffeo_to_character(f, faa_di_bruno_spec(5)), 6), f);
  }
}

TEST(Diffeo, ConvolutionIsComposition) {
  Random rng(22);
  const auto spec = faa_di_bruno_spec(4);
  for (int t = 0; t < 5; ++t) {
    const FormalDiffeo f = rng.diffeo(5), g = rng.diffeo(5);
    const UnitalLinMap pf = diffeo_to_character(f, spec).to_map(), pg = diffeo_to_character(g, spec).to_map();
    EXPECT_EQ(map_to_diffeo(convolve(pf, pg), 5), compose(f, g));
    EXPECT_EQ(map_to_diffeo(inverse_recursive(pf), 5), compositional_inverse(f));
  }
}

TEST(Factorization, PoleFreeInputIsItsOwnPlusPart) {
  const FormalDiffeo f(4, {{2, L("1 + e")}, {4, L("3*e^2")}});
  const DiffeoFactorization d = birkhoff_factorize(f, pole);
  EXPECT_EQ(d.plus, f);
  EXPECT_EQ(d.minus, FormalDiffeo::identity(4));
}

TEST(Factorization, SimplePoleByHand) {
  // f = x + e^-1 x^2: purely polar f gives f_- = f^-1 = x - e^-1 x^2 + 2 e^-2 x^3 and f_+ = x
  const FormalDiffeo f(3, {{2, L("e^-1")}});
  const DiffeoFactorization d = birkhoff_factorize(f, pole);
  EXPECT_EQ(d.minus, FormalDiffeo(3, {{2, L("-e^-1")}, {3, L("2*e^-2")}}));
  EXPECT_EQ(d.plus, FormalDiffeo::identity(3));
  EXPECT_TRUE(verify_factorization(f, d, pole).ok());
}

TEST(Factorization, MixedCoefficients) {
  const FormalDiffeo f(5, {{2, L("e^-1")}, {3, L("1/2*e^-2 + e")}, {5, L("-3 + e^-1")}});
  const DiffeoFactorization closed = birkhoff_factorize(f, pole, BrbRoute::Closed);
  const DiffeoFactorization recursive = birkhoff_factorize(f, pole, BrbRoute::Recursive);
  EXPECT_EQ(closed.plus, recursive.plus);
  EXPECT_EQ(closed.minus, recursive.minus);
  const auto report = verify_factorization(f, closed, pole);
  EXPECT_TRUE(report.composed_equals_plus);
  EXPECT_TRUE(report.minus_polar);
  EXPECT_TRUE(report.plus_pole_free);
}

TEST(Factorization, OrientationMatters) {
  // the other coproduct orientation factorizes f o f_- instead, which differs from order 4 on
  const FormalDiffeo f(4, {{2, L("e^-1")}, {3, L("e^-1 + 1")}, {4, L("e^-2")}});
  EXPECT_TRUE(verify_factorization(f, birkhoff_factorize(f, pole), pole).ok());
  EXPECT_FALSE(verify_factorization(f, birkhoff_factorize(f, pole, BrbRoute::Closed, FdbOrientation::InnerLeft), pole)
                   .composed_equals_plus);
}

TEST(Factorization, RandomDiffeos) {
  const auto r = verify::diffeo_factorization(23, 5, 6);
  EXPECT_TRUE(r.passed) << r.counterexample;
  const auto g = verify::diffeo_group(23, 3);
  EXPECT_TRUE(g.passed) << g.counterexample;
}
