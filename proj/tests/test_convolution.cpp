#include <gtest/gtest.h>

#include "brb/brb.hpp"
#include "brb/random.hpp"
#include "brb/verify.hpp"

using namespace brb;

namespace {

AlgebraElement L(std::string_view text) { return parse_algebra_element(text, BasisKind::Laurent); }

UnitalLinMap ladder_poles(int n) {
  const auto spec = ladder_spec(n);
  std::map<std::size_t, AlgebraElement> gens;
  for (int k = 1; k <= n; ++k) gens.emplace(static_cast<std::size_t>(k - 1), AlgebraElement::laurent(-k));
  return Character(spec, BasisKind::Laurent, gens).to_map();
}

}  // namespace

TEST(Convolution, UnitIsNeutral) {
  Random rng(1);
  const auto spec = ladder_spec(5);
  const UnitalLinMap f = rng.unital_map(spec);
  const UnitalLinMap e = convolution_unit(spec, BasisKind::Laurent);
  EXPECT_EQ(convolve(f, e), f);
  EXPECT_EQ(convolve(e, f), f);
  EXPECT_EQ(convolve(e, e), e);
  EXPECT_EQ(e(HopfMonomial{}), AlgebraElement::one(BasisKind::Laurent));
  EXPECT_TRUE(e(spec->parse_monomial("l3")).is_zero());
}

TEST(Convolution, LadderLowDegrees) {
  Random rng(2);
  const auto spec = ladder_spec(4);
  const UnitalLinMap f = rng.unital_map(spec), g = rng.unital_map(spec);
  const UnitalLinMap fg = convolve(f, g);
  const auto l1 = spec->parse_monomial("l1"), l2 = spec->parse_monomial("l2");
  EXPECT_EQ(fg(l1), f(l1) + g(l1));
  EXPECT_EQ(fg(l2), f(l2) + f(l1) * g(l1) + g(l2));
}

TEST(Convolution, GroupAxioms) {
  Random rng(3);
  for (const auto& spec : {ladder_spec(5), faa_di_bruno_spec(5)}) {
    const auto e = convolution_unit(spec, BasisKind::Laurent);
    for (int t = 0; t < 5; ++t) {
      const UnitalLinMap f = rng.unital_map(spec), g = rng.unital_map(spec), h = rng.unital_map(spec);
      EXPECT_EQ(convolve(convolve(f, g), h), convolve(f, convolve(g, h)));
      const UnitalLinMap inv = inverse_recursive(f);
      EXPECT_EQ(convolve(inv, f), e);
      EXPECT_EQ(convolve(f, inv), e);
    }
  }
}

TEST(Convolution, MismatchedSpecsThrow) {
  const auto a = convolution_unit(ladder_spec(3), BasisKind::Laurent);
  const auto b = convolution_unit(ladder_spec(4), BasisKind::Laurent);
  const auto c = convolution_unit(ladder_spec(3), BasisKind::FreeCommutative);
  EXPECT_THROW(convolve(a, b), SpecMismatch);
  EXPECT_THROW(convolve(a, c), BasisMismatch);
}

TEST(UnitalLinMap, RejectsBadValues) {
  const auto spec = ladder_spec(2);
  EXPECT_THROW(UnitalLinMap(spec, BasisKind::Laurent, {{HopfMonomial{}, L("2")}}), Error);
  EXPECT_THROW(UnitalLinMap(spec, BasisKind::Laurent, {{HopfMonomial({0, 0, 0}), L("1")}}), TruncationError);
  EXPECT_THROW(UnitalLinMap(spec, BasisKind::Laurent, {{HopfMonomial({0}), parse_algebra_element("a", BasisKind::FreeCommutative)}}),
               BasisMismatch);
}

TEST(Inverse, Examples) {
  Random rng(4);
  const auto spec = ladder_spec(4);
  const auto e = convolution_unit(spec, BasisKind::Laurent);
  EXPECT_EQ(inverse_recursive(e), e);
  EXPECT_EQ(inverse_series(e), e);
  const UnitalLinMap f = rng.unital_map(spec);
  const auto l1 = spec->parse_monomial("l1");
  EXPECT_EQ(inverse_recursive(f)(l1), -f(l1));
  EXPECT_EQ(inverse_series(f)(l1), -f(l1));
}

TEST(Inverse, SeriesEqualsRecursionOnRandomMaps) {
  Random rng(5);
  const auto spec = ladder_spec(6);
  for (int t = 0; t < 50; ++t) {
    const UnitalLinMap f = rng.unital_map(spec);
    ASSERT_EQ(inverse_series(f), inverse_recursive(f)) << verify::detail::show_map_difference(inverse_series(f), inverse_recursive(f));
  }
}

TEST(Characters, IsCharacter) {
  Random rng(6);
  const auto spec = ladder_spec(6);
  const Character phi = rng.character(spec);
  EXPECT_TRUE(is_character(phi.to_map(), 6));

  std::map<HopfMonomial, AlgebraElement> values = phi.to_map().values();
  values[spec->parse_monomial("l1^2")] = phi(spec->parse_monomial("l1^2")) + L("1");
  EXPECT_FALSE(is_character(UnitalLinMap(spec, BasisKind::Laurent, values), 6));

  const Character psi = rng.character(spec);
  EXPECT_TRUE(is_character(convolve(phi.to_map(), psi.to_map()), 6));
  EXPECT_TRUE(is_character(inverse_recursive(phi.to_map()), 6));
}

TEST(Bogoliubov, Examples) {
  Random rng(7);
  const auto spec = ladder_spec(4);
  const auto pole = RotaBaxterSplit::pole_part();
  const UnitalLinMap phi = rng.unital_map(spec);
  const UnitalLinMap bar = bogoliubov_prepare(phi, pole);
  const auto l1 = spec->parse_monomial("l1"), l2 = spec->parse_monomial("l2");
  EXPECT_EQ(bar(l1), phi(l1));
  EXPECT_EQ(bar(l2), phi(l2) - pole.minus(phi(l1)) * phi(l1));
  EXPECT_EQ(bogoliubov_prepare(phi, RotaBaxterSplit::trivial_plus()), phi);
}

TEST(BrbRecursive, TrivialCases) {
  Random rng(8);
  const auto spec = ladder_spec(5);
  const auto e = convolution_unit(spec, BasisKind::Laurent);
  const UnitalLinMap phi = rng.unital_map(spec);
  const BrbDecomposition t = brb_recursive(phi, RotaBaxterSplit::trivial_plus());
  EXPECT_EQ(t.plus, phi);
  EXPECT_EQ(t.minus, e);

  const UnitalLinMap regular = rng.unital_map(spec, LaurentShape{0, 3, 3});
  const BrbDecomposition r = brb_recursive(regular, RotaBaxterSplit::pole_part());
  EXPECT_EQ(r.plus, regular);
  EXPECT_EQ(r.minus, e);
}

TEST(BrbRecursive, LadderPolesAtDegreeFour) {
  // phi(l_n) = e^-n: only l1 carries a divergence, phi_- = exp-like counterterm
  const UnitalLinMap phi = ladder_poles(4);
  const auto& spec = phi.spec();
  const BrbDecomposition d = brb_recursive(phi, RotaBaxterSplit::pole_part());
  const std::map<std::string, std::pair<std::string, std::string>> expected{
      {"l1", {"0", "-e^-1"}},     {"l1^2", {"0", "e^-2"}},  {"l2", {"0", "0"}},    {"l1^3", {"0", "-e^-3"}},
      {"l1*l2", {"0", "0"}},      {"l3", {"0", "0"}},       {"l1^4", {"0", "e^-4"}}, {"l1^2*l2", {"0", "0"}},
      {"l1*l3", {"0", "0"}},      {"l2^2", {"0", "0"}},     {"l4", {"0", "0"}}};
  ASSERT_EQ(spec.monomials().size(), expected.size());
  for (const auto& m : spec.monomials()) {
    const auto& [plus, minus] = expected.at(spec.render(m));
    EXPECT_EQ(to_string(d.plus(m)), plus) << spec.render(m);
    EXPECT_EQ(to_string(d.minus(m)), minus) << spec.render(m);
  }
  EXPECT_EQ(convolve(d.minus, phi), d.plus);
}

TEST(BrbRecursive, MixedLadderByHand) {
  // phi(l1) = e^-1 + 1, phi(l2) = e^-2 + e
  const auto spec = ladder_spec(2);
  const UnitalLinMap phi = Character(spec, BasisKind::Laurent, {{0, L("e^-1 + 1")}, {1, L("e^-2 + e")}}).to_map();
  const BrbDecomposition d = brb_recursive(phi, RotaBaxterSplit::pole_part());
  const auto l1 = spec->parse_monomial("l1"), l2 = spec->parse_monomial("l2");
  EXPECT_EQ(d.minus(l1), L("-e^-1"));
  EXPECT_EQ(d.plus(l1), L("1"));
  // bar(l2) = e^-2 + e - e^-1 (e^-1 + 1) = -e^-1 + e
  EXPECT_EQ(d.minus(l2), L("e^-1"));
  EXPECT_EQ(d.plus(l2), L("e"));
}

TEST(BrbRecursive, ContractAndUniqueness) {
  for (const auto& spec : {ladder_spec(5), faa_di_bruno_spec(4)}) {
    const auto r = verify::brb_contract(spec, 9, 10, 5);
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
  }
}

TEST(FirstDifference, ReportsCanonicalFirstMonomial) {
  const auto spec = ladder_spec(3);
  const auto e = convolution_unit(spec, BasisKind::Laurent);
  const UnitalLinMap f(spec, BasisKind::Laurent, {{spec->parse_monomial("l3"), L("1")}, {spec->parse_monomial("l2"), L("1")}});
  EXPECT_FALSE(first_difference(e, e).has_value());
  EXPECT_EQ(spec->render(*first_difference(e, f)), "l2");
}
