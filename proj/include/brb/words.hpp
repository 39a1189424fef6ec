#pragma once

// Tensor words over a multiplicative monomial basis and the quasi-shuffle
// (stuffle) Hopf algebra they span. Letters are any totally ordered type with
// an associative, commutative operator* that maps basis letters to basis
// letters (algebra monomials, Hopf-algebra monomials).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "brb/linear.hpp"

namespace brb {

template <class Letter>
using Word = std::vector<Letter>;

/// Length first, then lexicographic on letters.
struct ShortlexLess {
  template <class T>
  bool operator()(const std::vector<T>& a, const std::vector<T>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

template <class Letter>
using WordElement = Linear<Word<Letter>, ShortlexLess>;

/// n-fold tensor of words: key is the tuple (w1, ..., wn).
template <class Letter>
using WordTensor = Linear<std::vector<Word<Letter>>>;

template <class Letter>
WordElement<Letter> empty_word_element() {
  return WordElement<Letter>(Word<Letter>{});
}

template <class Letter>
WordElement<Letter> word_element(Word<Letter> w, const Rational& c = 1) {
  return WordElement<Letter>(std::move(w), c);
}

/// Visits every composition of a length-s word into nonempty contiguous
/// blocks, as the list of block end positions (the last is always s).
/// s = 0 has no compositions.
template <class F>
void for_each_composition(std::size_t s, F&& visit) {
  if (s == 0) return;
  const std::uint64_t gaps = s - 1;
  std::vector<std::size_t> ends;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
    ends.clear();
    for (std::size_t g = 0; g < gaps; ++g)
      if (mask & (std::uint64_t{1} << g)) ends.push_back(g + 1);
    ends.push_back(s);
    visit(static_cast<const std::vector<std::size_t>&>(ends));
  }
}

/// Splits w at the given block ends.
template <class Letter>
std::vector<Word<Letter>> split_word(const Word<Letter>& w, const std::vector<std::size_t>& ends) {
  std::vector<Word<Letter>> blocks;
  blocks.reserve(ends.size());
  std::size_t start = 0;
  for (std::size_t e : ends) {
    blocks.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start),
                        w.begin() + static_cast<std::ptrdiff_t>(e));
    start = e;
  }
  return blocks;
}

template <class Letter>
Word<Letter> concat(const Word<Letter>& a, const Word<Letter>& b) {
  Word<Letter> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Concatenation extended bilinearly.
template <class Letter>
WordElement<Letter> concat(const WordElement<Letter>& x, const WordElement<Letter>& y) {
  WordElement<Letter> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(concat(a, b), ca * cb);
  return out;
}

template <class Letter>
WordElement<Letter> append_letter(const WordElement<Letter>& x, const Letter& letter) {
  WordElement<Letter> out;
  for (const auto& [w, c] : x) {
    Word<Letter> v(w);
    v.push_back(letter);
    out.add(std::move(v), c);
  }
  return out;
}

/// Stuffle product of two basis words. Unfolds the last-letter recursion
///   a*b = (a~ * b) a_r + (a * b~) b_s + (a~ * b~)(a_r b_s)
/// over prefix lengths.
template <class Letter>
WordElement<Letter> stuffle_words(const Word<Letter>& a, const Word<Letter>& b) {
  const std::size_t r = a.size();
  const std::size_t s = b.size();
  std::vector<std::vector<WordElement<Letter>>> table(r + 1, std::vector<WordElement<Letter>>(s + 1));
  for (std::size_t i = 0; i <= r; ++i)
    table[i][0] = word_element(Word<Letter>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i)));
  for (std::size_t j = 1; j <= s; ++j)
    table[0][j] = word_element(Word<Letter>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j)));
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= s; ++j) {
      WordElement<Letter> cell = append_letter(table[i - 1][j], a[i - 1]);
      cell += append_letter(table[i][j - 1], b[j - 1]);
      cell += append_letter(table[i - 1][j - 1], a[i - 1] * b[j - 1]);
      table[i][j] = std::move(cell);
    }
  }
  return std::move(table[r][s]);
}

template <class Letter>
WordElement<Letter> stuffle_product(const WordElement<Letter>& x, const WordElement<Letter>& y) {
  WordElement<Letter> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out += stuffle_words(a, b) * (ca * cb);
  return out;
}

/// m_st^[k] applied to a tuple of words (k >= 1).
template <class Letter>
WordElement<Letter> stuffle_all(const std::vector<Word<Letter>>& blocks) {
  WordElement<Letter> acc = empty_word_element<Letter>();
  for (const auto& b : blocks) acc = stuffle_product(acc, word_element(b));
  return acc;
}

/// Coefficient of the empty word.
template <class Letter>
Rational counit_st(const WordElement<Letter>& x) {
  return x.coefficient(Word<Letter>{});
}

/// Deconcatenation coproduct, returned as a 2-fold tensor.
template <class Letter>
WordTensor<Letter> deconcat_coproduct(const WordElement<Letter>& x) {
  WordTensor<Letter> out;
  for (const auto& [w, c] : x) {
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      out.add({Word<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)),
               Word<Letter>(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end())},
              c);
    }
  }
  return out;
}

/// n-fold iterated deconcatenation. The reduced form keeps only cuts into n
/// nonempty blocks; the full form allows empty blocks.
template <class Letter>
WordTensor<Letter> iterated_coproduct(const WordElement<Letter>& x, std::size_t n, bool reduced = true) {
  WordTensor<Letter> out;
  if (n == 0) return out;
  for (const auto& [w, c] : x) {
    const std::size_t s = w.size();
    if (reduced) {
      if (s == 0) continue;
      for_each_composition(s, [&](const std::vector<std::size_t>& ends) {
        if (ends.size() == n) out.add(split_word(w, ends), c);
      });
    } else {
      // nondecreasing cut positions 0 <= e1 <= ... <= e_{n-1} <= s
      std::vector<std::size_t> ends(n, 0);
      ends.back() = s;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t lo) {
        if (idx + 1 == n) {
          out.add(split_word(w, ends), c);
          return;
        }
        for (std::size_t e = lo; e <= s; ++e) {
          ends[idx] = e;
          rec(idx + 1, e);
        }
      };
      rec(0, 0);
    }
  }
  return out;
}

/// S(a) = sum_k (-1)^k sum_{a = a^1...a^k} a^1 * ... * a^k, S(empty) = empty.
template <class Letter>
WordElement<Letter> stuffle_antipode(const Word<Letter>& w) {
  if (w.empty()) return empty_word_element<Letter>();
  WordElement<Letter> out;
  for_each_composition(w.size(), [&](const std::vector<std::size_t>& ends) {
    const Rational sign = (ends.size() % 2 == 0) ? 1 : -1;
    out += stuffle_all(split_word(w, ends)) * sign;
  });
  return out;
}

template <class Letter>
WordElement<Letter> stuffle_antipode(const WordElement<Letter>& x) {
  WordElement<Letter> out;
  for (const auto& [w, c] : x) out += stuffle_antipode(w) * c;
  return out;
}

/// Componentwise stuffle product of two n-fold tensors (product in (A^st)^{(x)n}).
template <class Letter>
WordTensor<Letter> tensor_stuffle(const WordTensor<Letter>& x, const WordTensor<Letter>& y) {
  WordTensor<Letter> out;
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : y) {
      // expand the product factor by factor
      std::vector<std::pair<std::vector<Word<Letter>>, Rational>> partial{{{}, cu * cv}};
      for (std::size_t i = 0; i < u.size(); ++i) {
        const WordElement<Letter> f = stuffle_words(u[i], v[i]);
        std::vector<std::pair<std::vector<Word<Letter>>, Rational>> next;
        for (const auto& [prefix, c] : partial) {
          for (const auto& [w, cw] : f) {
            auto p = prefix;
            p.push_back(w);
            next.emplace_back(std::move(p), c * cw);
          }
        }
        partial = std::move(next);
      }
      for (auto& [k, c] : partial) out.add(std::move(k), c);
    }
  }
  return out;
}

/// Applies a linear map (given on basis words) to factor `index` of a tensor.
template <class Letter, class F>
WordTensor<Letter> apply_to_factor(const WordTensor<Letter>& t, std::size_t index, F&& f) {
  WordTensor<Letter> out;
  for (const auto& [key, c] : t) {
    const WordElement<Letter> image = f(key[index]);
    for (const auto& [w, cw] : image) {
      auto k = key;
      k[index] = w;
      out.add(std::move(k), c * cw);
    }
  }
  return out;
}

/// Replaces factor `index` by the 2-fold tensor map g(word) (increasing arity by one).
template <class Letter, class G>
WordTensor<Letter> expand_factor(const WordTensor<Letter>& t, std::size_t index, G&& g) {
  WordTensor<Letter> out;
  for (const auto& [key, c] : t) {
    const WordTensor<Letter> image = g(word_element(key[index]));
    for (const auto& [pair, cw] : image) {
      std::vector<Word<Letter>> k;
      k.reserve(key.size() + pair.size() - 1);
      k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(index));
      k.insert(k.end(), pair.begin(), pair.end());
      k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(index) + 1, key.end());
      out.add(std::move(k), c * cw);
    }
  }
  return out;
}

template <class Letter, class Render>
std::string render_word(const Word<Letter>& w, Render&& render_letter) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " | ";
    out += render_letter(w[i]);
  }
  return out + "]";
}

template <class Letter, class Render>
std::string render_word_element(const WordElement<Letter>& x, Render&& render_letter) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x) {
    Rational a = c;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) a = -c;
    }
    first = false;
    if (a == -1) out += "-";
    else if (a != 1) out += to_string(a) + "*";
    out += render_word(w, render_letter);
  }
  return out;
}

}  // namespace brb
