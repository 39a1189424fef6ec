#pragma once

// Seeded generators for small exact test data. Bounded draws use plain
// modular reduction of a 64-bit Mersenne twister so that a seed produces the
// same values with every standard library.

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "brb/algebra.hpp"
#include "brb/convolution.hpp"
#include "brb/diffeo.hpp"
#include "brb/hopf.hpp"
#include "brb/stuffle.hpp"
#include "brb/universal.hpp"

namespace brb {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct LaurentShape {
  int min_exponent = -3;
  int max_exponent = 3;
  int max_terms = 3;
};

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

  /// Numerator in [-9, 9], denominator in {1, 2, 3}.
  Rational rational() { return Rational(uniform(-9, 9)) / uniform(1, 3); }

  Rational nonzero_rational() {
    int num = 0;
    while (num == 0) num = uniform(-9, 9);
    return Rational(num) / uniform(1, 3);
  }

  /// Laurent polynomial with up to shape.max_terms terms (possibly zero).
  AlgebraElement laurent(const LaurentShape& shape = {}) {
    AlgebraElement x(BasisKind::Laurent);
    const int terms = uniform(0, shape.max_terms);
    for (int i = 0; i < terms; ++i)
      x.add_term(Monomial::laurent(uniform(shape.min_exponent, shape.max_exponent)), rational());
    return x;
  }

  AlgebraElement nonzero_laurent(const LaurentShape& shape = {}) {
    AlgebraElement x = laurent(shape);
    while (x.is_zero()) x = laurent(shape);
    return x;
  }

  Monomial laurent_letter(int lo = -3, int hi = 3) { return Monomial::laurent(uniform(lo, hi)); }

  StuffleWord laurent_word(std::size_t length, int lo = -3, int hi = 3) {
    StuffleWord w;
    for (std::size_t i = 0; i < length; ++i) w.push_back(laurent_letter(lo, hi));
    return w;
  }

  /// Letters drawn from a small symbol alphabet {s0, s1, ...}.
  StuffleWord symbol_word(std::size_t length, int alphabet = 3) {
    StuffleWord w;
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<std::string> product{"s" + std::to_string(uniform(0, alphabet - 1))};
      if (coin() && coin()) product.push_back("s" + std::to_string(uniform(0, alphabet - 1)));
      w.push_back(Monomial::symbols(product));
    }
    return w;
  }

  StuffleElement stuffle_element(std::size_t max_length, std::size_t terms = 2) {
    StuffleElement x;
    for (std::size_t i = 0; i < terms; ++i)
      x.add(laurent_word(static_cast<std::size_t>(uniform(0, static_cast<int>(max_length)))), nonzero_rational());
    return x;
  }

  UnitalLinMap unital_map(const HopfSpecPtr& spec, const LaurentShape& shape = {}) {
    return UnitalLinMap::from_function(spec, BasisKind::Laurent, [&](const HopfMonomial&) { return laurent(shape); });
  }

  Character character(const HopfSpecPtr& spec, const LaurentShape& shape = {}) {
    std::map<std::size_t, AlgebraElement> values;
    for (std::size_t g = 0; g < spec->generators().size(); ++g) values.emplace(g, laurent(shape));
    return Character(spec, BasisKind::Laurent, std::move(values));
  }

  FormalDiffeo diffeo(int order, const LaurentShape& shape = {}) {
    std::map<int, AlgebraElement> c;
    for (int n = 2; n <= order; ++n) c.emplace(n, laurent(shape));
    return FormalDiffeo(order, std::move(c));
  }

  /// Functional on A^st with pseudo-random values on words of length 1..max_support
  /// and zero beyond. Values depend only on (seed, word), so the rule is a
  /// genuine function of the word.
  StuffleFunctional finite_support_functional(std::size_t max_support = 2, const LaurentShape& shape = {}) {
    const std::uint64_t salt = engine_();
    return StuffleFunctional::custom(
        BasisKind::Laurent,
        [salt, shape](const StuffleWord& w) {
          std::uint64_t h = splitmix64(salt ^ w.size());
          for (const auto& m : w) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(m.exponent()) + 1000));
          Random local(h);
          return local.laurent(shape);
        },
        max_support);
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace brb
