#pragma once

// The stuffle Hopf algebra A^st: words whose letters are basis monomials of the
// target algebra A.

#include <initializer_list>
#include <string>

#include "brb/algebra.hpp"
#include "brb/words.hpp"

namespace brb {

using StuffleWord = Word<Monomial>;
using StuffleElement = WordElement<Monomial>;
using StuffleTensor = WordTensor<Monomial>;

/// Renders `[e^-1 | e^2 | 1]`; the empty word is `[]`.
inline std::string to_string(const StuffleWord& w) {
  return render_word(w, [](const Monomial& m) { return to_string(m); });
}

inline std::string to_string(const StuffleElement& x) {
  return render_word_element(x, [](const Monomial& m) { return to_string(m); });
}

/// Letter-by-letter word from Laurent exponents, e.g. laurent_word({-1, 2, 0}).
inline StuffleWord laurent_word(std::initializer_list<int> exponents) {
  StuffleWord w;
  for (int k : exponents) w.push_back(Monomial::laurent(k));
  return w;
}

/// Word of single-symbol letters, e.g. symbol_word({"a1", "a2"}).
inline StuffleWord symbol_word(std::initializer_list<const char*> names) {
  StuffleWord w;
  for (const char* n : names) w.push_back(Monomial::symbols({n}));
  return w;
}

}  // namespace brb
