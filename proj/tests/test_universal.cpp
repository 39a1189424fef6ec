#include <gtest/gtest.h>

#include "brb/brb.hpp"
#include "brb/random.hpp"
#include "brb/verify.hpp"

using namespace brb;

namespace {

AlgebraElement L(std::string_view text) { return parse_algebra_element(text, BasisKind::Laurent); }
AlgebraElement S(std::string_view text) { return parse_algebra_element(text, BasisKind::FreeCommutative); }

const RotaBaxterSplit pole = RotaBaxterSplit::pole_part();

}  // namespace

TEST(Iota, LadderExamples) {
  const auto spec = ladder_spec(4);
  const auto l = [&](std::string_view t) { return spec->parse_monomial(t); };
  EXPECT_EQ(iota(*spec, HopfMonomial{}), empty_word_element<HopfMonomial>());
  EXPECT_EQ(iota(*spec, l("l1")), word_element(HopfWord{l("l1")}));
  EXPECT_EQ(iota(*spec, l("l2")), word_element(HopfWord{l("l2")}) + word_element(HopfWord{l("l1"), l("l1")}));
  const HopfWordElement l3 = word_element(HopfWord{l("l3")}) + word_element(HopfWord{l("l1"), l("l2")}) +
                             word_element(HopfWord{l("l2"), l("l1")}) + word_element(HopfWord{l("l1"), l("l1"), l("l1")});
  EXPECT_EQ(iota(*spec, l("l3")), l3);
  for (const auto& m : spec->monomials()) EXPECT_EQ(iota(*spec, m), iota_recursive(*spec, m)) << spec->render(m);
}

TEST(Iota, HopfMorphismTheorem) {
  for (const auto& spec : {ladder_spec(5), faa_di_bruno_spec(5)}) {
    const auto r = verify::iota_theorem(spec, 5);
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
  }
}

TEST(LiftCharacter, ExpandsLettersMultilinearly) {
  const auto spec = ladder_spec(2);
  const UnitalLinMap phi = Character(spec, BasisKind::Laurent, {{0, L("e^-1 + 1")}, {1, L("2*e")}}).to_map();
  const auto l1 = spec->parse_monomial("l1"), l2 = spec->parse_monomial("l2");
  const StuffleElement expected = word_element(laurent_word({-1, -1})) + word_element(laurent_word({-1, 0})) +
                                  word_element(laurent_word({0, -1})) + word_element(laurent_word({0, 0}));
  EXPECT_EQ(lift_character(phi, word_element(HopfWord{l1, l1})), expected);
  EXPECT_EQ(lift_character(phi, word_element(HopfWord{l2})), word_element(laurent_word({1}), 2));
  EXPECT_EQ(lift_character(phi, empty_word_element<HopfMonomial>()), empty_word_element<Monomial>());
}

TEST(Functionals, JAndUnit) {
  const auto j = StuffleFunctional::j();
  EXPECT_EQ(j(StuffleWord{}), L("1"));
  EXPECT_EQ(j(laurent_word({-2})), L("e^-2"));
  EXPECT_TRUE(j(laurent_word({-1, 1})).is_zero());
  EXPECT_TRUE(StuffleFunctional::unit()(laurent_word({3})).is_zero());
  EXPECT_EQ(StuffleFunctional::unit()(StuffleWord{}), L("1"));
}

TEST(Functionals, JInverseExamples) {
  const auto ji = StuffleFunctional::j_inverse(BasisKind::FreeCommutative);
  EXPECT_EQ(ji(symbol_word({"a1"})), S("-a1"));
  EXPECT_EQ(ji(symbol_word({"a1", "a2"})), S("a1*a2"));
  EXPECT_EQ(ji(symbol_word({"a1", "a2", "a3"})), S("-a1*a2*a3"));
  const auto r = verify::j_inverse_closed_form(5, 4, 10);
  EXPECT_TRUE(r.passed) << r.counterexample;
}

TEST(Functionals, JMinusAndJPlusExamples) {
  const auto jm = StuffleFunctional::j_minus(pole), jp = StuffleFunctional::j_plus(pole);
  EXPECT_EQ(jm(laurent_word({-1})), L("-e^-1"));
  EXPECT_TRUE(jm(laurent_word({1})).is_zero());
  EXPECT_EQ(jp(laurent_word({1})), L("e"));
  EXPECT_TRUE(jp(laurent_word({-1})).is_zero());
  // p-(e^-1) e^-1 = e^-2
  EXPECT_EQ(jm(laurent_word({-1, -1})), L("e^-2"));
  EXPECT_TRUE(jp(laurent_word({-1, -1})).is_zero());
  // p-(e^-1) e = 1 lands in A+
  EXPECT_EQ(jp(laurent_word({-1, 1})), L("-1"));
  EXPECT_TRUE(jm(laurent_word({-1, 1})).is_zero());
  // once the running product has no pole the value vanishes
  EXPECT_TRUE(jm(laurent_word({1, -1, -1})).is_zero());
  EXPECT_TRUE(jp(laurent_word({0, -1})).is_zero());
}

TEST(Functionals, BogoliubovOfJ) {
  EXPECT_EQ(bogoliubov_j(pole, laurent_word({-1})), L("e^-1"));
  EXPECT_EQ(bogoliubov_j(pole, laurent_word({-1, -1})), L("-e^-2"));
  EXPECT_EQ(bogoliubov_j(pole, laurent_word({-1, -1, 2})), L("1"));
  const auto bar = functional_bogoliubov(StuffleFunctional::j(), pole);
  Random rng(12);
  for (int t = 0; t < 30; ++t) {
    const StuffleWord w = rng.laurent_word(static_cast<std::size_t>(rng.uniform(1, 4)));
    EXPECT_EQ(bar(w), bogoliubov_j(pole, w)) << to_string(w);
  }
  const auto r = verify::j_bogoliubov(5, 4, 10);
  EXPECT_TRUE(r.passed) << r.counterexample;
}

TEST(Functionals, PlusAndMinusAreCharacters) {
  const auto r = verify::functional_characters(5, 100, 4);
  EXPECT_TRUE(r.passed) << r.counterexample;
}

TEST(Functionals, InverseSeriesAgreesWithRecursion) {
  Random rng(13);
  const auto f = rng.finite_support_functional(2);
  const auto rec = functional_inverse_recursive(f), ser = functional_inverse_series(f);
  for (int t = 0; t < 20; ++t) {
    const StuffleWord w = rng.laurent_word(static_cast<std::size_t>(rng.uniform(0, 4)));
    EXPECT_EQ(rec(w), ser(w)) << to_string(w);
    EXPECT_EQ(convolve(f, rec)(w), StuffleFunctional::unit()(w)) << to_string(w);
  }
}

TEST(ActionT, JActsAsIdentityAndUnitAsCounit) {
  Random rng(14);
  const auto spec = ladder_spec(5);
  const UnitalLinMap phi = rng.unital_map(spec);
  EXPECT_EQ(apply_T(StuffleFunctional::j(), phi), phi);
  EXPECT_EQ(apply_T(StuffleFunctional::unit(), phi), convolution_unit(spec, BasisKind::Laurent));
  EXPECT_EQ(apply_T_materialized(StuffleFunctional::j_minus(pole), phi), apply_T(StuffleFunctional::j_minus(pole), phi));
}

TEST(ActionT, RejectsMismatchedTarget) {
  Random rng(15);
  const UnitalLinMap phi = rng.unital_map(ladder_spec(3));
  EXPECT_THROW(apply_T(StuffleFunctional::j(BasisKind::FreeCommutative), phi), BasisMismatch);
}

TEST(ActionT, PropertyChecks) {
  for (const auto& spec : {ladder_spec(5), faa_di_bruno_spec(4)}) {
    const auto a = verify::t_action_identities(spec, 16, 10, 3);
    EXPECT_TRUE(a.passed) << a.name << ": " << a.counterexample;
    const auto h = verify::t_homomorphism(spec, 16, 3, 4);
    EXPECT_TRUE(h.passed) << h.name << ": " << h.counterexample;
  }
}

TEST(Odot, JIsTheIdentity) {
  Random rng(17);
  const auto f = rng.finite_support_functional(3);
  const auto j = StuffleFunctional::j();
  for (int t = 0; t < 20; ++t) {
    const StuffleWord w = rng.laurent_word(static_cast<std::size_t>(rng.uniform(0, 3)), -2, 2);
    EXPECT_EQ(odot(j, f)(w), f(w)) << to_string(w);
    EXPECT_EQ(odot(f, j)(w), f(w)) << to_string(w);
  }
  const auto r = verify::odot_identities(17, 4, 3);
  EXPECT_TRUE(r.passed) << r.counterexample;
}

TEST(ClosedForms, MatchRecursionByHand) {
  const auto spec = ladder_spec(2);
  const UnitalLinMap phi = Character(spec, BasisKind::Laurent, {{0, L("e^-1 + 1")}, {1, L("e^-2 + e")}}).to_map();
  const BrbDecomposition closed = closed_brb(phi, pole);
  const auto l2 = spec->parse_monomial("l2");
  EXPECT_EQ(closed.minus(l2), L("e^-1"));
  EXPECT_EQ(closed.plus(l2), L("e"));
  EXPECT_EQ(closed_inverse(phi), inverse_recursive(phi));
  EXPECT_EQ(closed_inverse(phi)(l2), L("2*e^-1 + 1 - e"));
}

TEST(ClosedForms, PropertyChecks) {
  for (const auto& spec : {ladder_spec(5), faa_di_bruno_spec(4)}) {
    const auto c = verify::closed_vs_recursive(spec, 18, 10, 5);
    EXPECT_TRUE(c.passed) << c.name << ": " << c.counterexample;
    const auto d = verify::degree_three_formulas(spec, 18, 3);
    EXPECT_TRUE(d.passed) << d.name << ": " << d.counterexample;
  }
}
