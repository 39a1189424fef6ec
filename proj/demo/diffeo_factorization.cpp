// Birkhoff factorization f_- o f = f_+ of a formal diffeomorphism with poles.

#include <iostream>

#include "brb/brb.hpp"

int main() {
  using namespace brb;
  const auto e = [](int k, Rational c = 1) { return AlgebraElement::laurent(k, c); };
  const FormalDiffeo f(5, {{2, e(-1)}, {3, e(-2, Rational(1) / 2) + e(1)}, {4, e(-1) + e(0, 3)}, {5, e(-3)}});
  const auto split = RotaBaxterSplit::pole_part();

  const DiffeoFactorization d = birkhoff_factorize(f, split);
  const FactorizationReport r = verify_factorization(f, d, split);

  std::cout << "f   = " << to_string(f) << "\n"
            << "f_+ = " << to_string(d.plus) << "\n"
            << "f_- = " << to_string(d.minus) << "\n"
            << std::boolalpha << "f_- o f == f_+: " << r.composed_equals_plus << "\n"
            << "f_- polar: " << r.minus_polar << ", f_+ pole-free: " << r.plus_pole_free << "\n";
}
