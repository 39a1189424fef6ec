// Minimal subtraction on the ladder toy model: a character with a pole of
// order n on the n-rung ladder, renormalized through the closed formula and
// checked against the Bogoliubov recursion.

#include <iostream>
#include <map>

#include "brb/brb.hpp"

int main() {
  using namespace brb;
  const auto spec = ladder_spec(4);
  std::map<std::size_t, AlgebraElement> rungs;
  for (std::size_t g = 0; g < 4; ++g) {
    const int n = static_cast<int>(g) + 1;
    // 1/(n e^n) + 1/n: a leading pole plus a finite part
    rungs.emplace(g, AlgebraElement::laurent(-n, Rational(1) / n) + AlgebraElement::constant(BasisKind::Laurent, Rational(1) / n));
  }
  const UnitalLinMap phi = Character(spec, BasisKind::Laurent, rungs).to_map();
  const auto split = RotaBaxterSplit::pole_part();

  const BrbDecomposition closed = closed_brb(phi, split);
  const BrbDecomposition recursive = brb_recursive(phi, split);

  for (const auto& m : spec->monomials()) {
    std::cout << spec->render(m) << "\n"
              << "  phi   = " << to_string(phi(m)) << "\n"
              << "  phi_+ = " << to_string(closed.plus(m)) << "\n"
              << "  phi_- = " << to_string(closed.minus(m)) << "\n";
  }
  std::cout << "closed == recursive: " << std::boolalpha
            << (closed.plus == recursive.plus && closed.minus == recursive.minus) << "\n"
            << "phi_- * phi == phi_+: " << (convolve(closed.minus, phi) == closed.plus) << "\n";
}
