#pragma once

// Universal formulas for inverses and Birkhoff-Rota-Baxter factorizations.
//
// Every connected Hopf algebra H embeds into the stuffle algebra H'^st through
//   iota(h) = sum_{k>=1} Delta'^[k](h),
// and a functional F on A^st acts on phi in U(H, A) by T(F, phi) = F o phi^st o iota.
// T is multiplicative in F and T(j, phi) = phi for the functional j that keeps
// only one-letter words, so the inverse and the BRB factors of j in U(A^st, A)
// (closed forms below) give those of any phi.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brb/algebra.hpp"
#include "brb/convolution.hpp"
#include "brb/errors.hpp"
#include "brb/hopf.hpp"
#include "brb/rota_baxter.hpp"
#include "brb/stuffle.hpp"
#include "brb/words.hpp"

namespace brb {

// ---------------------------------------------------------------------------
// iota : H -> H'^st

/// iota(1_H) = empty word; iota(h) = sum_k Delta'^[k](h) on H'.
inline HopfWordElement iota(const HopfAlgebraSpec& spec, const HopfElement& h) {
  HopfWordElement out;
  for (const auto& [m, c] : h) {
    spec.check_degree(m);
    if (m.is_unit()) {
      out.add(HopfWord{}, c);
      continue;
    }
    const HopfElement single(m);
    for (int k = 1; k <= spec.degree(m); ++k) out += spec.iterated_reduced_coproduct(single, k) * c;
  }
  return out;
}

inline HopfWordElement iota(const HopfAlgebraSpec& spec, const HopfMonomial& m) {
  return iota(spec, HopfElement(m));
}

/// The same map through iota(h) = h + iota(h'_(1)) (x) h'_(2).
inline HopfWordElement iota_recursive(const HopfAlgebraSpec& spec, const HopfMonomial& m) {
  spec.check_degree(m);
  if (m.is_unit()) return empty_word_element<HopfMonomial>();
  HopfWordElement out = word_element(HopfWord{m});
  for (const auto& [pair, c] : spec.reduced_coproduct(m))
    out += append_letter(iota_recursive(spec, pair.first), pair.second) * c;
  return out;
}

// ---------------------------------------------------------------------------
// phi^st : H'^st -> A^st

namespace detail {

/// Expands a1 (x) ... (x) ak (letters are algebra elements) into basis words.
inline StuffleElement expand_word(std::span<const AlgebraElement> letters) {
  StuffleElement acc = empty_word_element<Monomial>();
  for (const auto& a : letters) {
    StuffleElement next;
    for (const auto& [w, c] : acc) {
      for (const auto& [m, cm] : a.terms()) {
        StuffleWord v(w);
        v.push_back(m);
        next.add(std::move(v), c * cm);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

/// Letterwise application of phi, expanded multilinearly into words over the
/// monomial basis of A.
inline StuffleElement lift_character(const UnitalLinMap& phi, const HopfWordElement& x) {
  StuffleElement out;
  std::vector<AlgebraElement> letters;
  for (const auto& [w, c] : x) {
    letters.clear();
    for (const auto& m : w) letters.push_back(phi(m));
    out += detail::expand_word(letters) * c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Functionals in U(A^st, A)

class StuffleFunctional {
 public:
  enum class Kind { J, JInverse, JPlus, JMinus, Unit, Custom };
  using Rule = std::function<AlgebraElement(const StuffleWord&)>;

  /// j(empty) = 1, j(a) = a, j vanishes on words of length >= 2.
  static StuffleFunctional j(BasisKind target = BasisKind::Laurent) { return {Kind::J, target}; }
  /// (-1)^s a1 ... as.
  static StuffleFunctional j_inverse(BasisKind target = BasisKind::Laurent) { return {Kind::JInverse, target}; }
  /// (-1)^{r-1} p+(p-(...(p-(a1) a2)...) ar).
  static StuffleFunctional j_plus(RotaBaxterSplit split, BasisKind target = BasisKind::Laurent) {
    StuffleFunctional f{Kind::JPlus, target};
    f.split_ = split;
    return f;
  }
  /// (-1)^r p-(p-(...(p-(a1) a2)...) ar).
  static StuffleFunctional j_minus(RotaBaxterSplit split, BasisKind target = BasisKind::Laurent) {
    StuffleFunctional f{Kind::JMinus, target};
    f.split_ = split;
    return f;
  }
  /// u_A o eta_st.
  static StuffleFunctional unit(BasisKind target = BasisKind::Laurent) { return {Kind::Unit, target}; }

  /// Arbitrary rule on nonempty basis words; the value at the empty word is
  /// always 1_A. If max_support is set the rule is taken to vanish on longer words.
  static StuffleFunctional custom(BasisKind target, Rule rule, std::optional<std::size_t> max_support = {}) {
    StuffleFunctional f{Kind::Custom, target};
    f.rule_ = std::make_shared<const Rule>(std::move(rule));
    f.max_support_ = max_support;
    return f;
  }

  Kind kind() const noexcept { return kind_; }
  BasisKind target() const noexcept { return target_; }
  const std::optional<RotaBaxterSplit>& split() const noexcept { return split_; }
  const std::optional<std::size_t>& max_support() const noexcept { return max_support_; }

  /// Value on a basis word.
  AlgebraElement operator()(const StuffleWord& w) const {
    if (w.empty()) return AlgebraElement::one(target_);
    if (kind_ == Kind::Custom) {
      if (max_support_ && w.size() > *max_support_) return AlgebraElement::zero(target_);
      AlgebraElement v = (*rule_)(w);
      if (v.kind() != target_) throw BasisMismatch("custom functional returned a value of the wrong kind");
      return v;
    }
    std::vector<AlgebraElement> letters;
    letters.reserve(w.size());
    for (const auto& m : w) letters.push_back(AlgebraElement::term(m));
    return on_letters(letters);
  }

  AlgebraElement operator()(const StuffleElement& x) const {
    AlgebraElement out(target_);
    for (const auto& [w, c] : x) out += (*this)(w) * c;
    return out;
  }

  /// Value on a1 (x) ... (x) ak with algebra-element letters, by multilinearity.
  /// The closed-form functionals fold the letters directly; custom rules expand
  /// into basis words first.
  AlgebraElement on_letters(std::span<const AlgebraElement> letters) const {
    const std::size_t s = letters.size();
    if (s == 0) return AlgebraElement::one(target_);
    for (const auto& a : letters)
      if (a.kind() != target_) throw BasisMismatch("letter outside the functional's target algebra");
    switch (kind_) {
      case Kind::Unit:
        return AlgebraElement::zero(target_);
      case Kind::J:
        return s == 1 ? letters[0] : AlgebraElement::zero(target_);
      case Kind::JInverse: {
        AlgebraElement acc = letters[0];
        for (std::size_t i = 1; i < s && !acc.is_zero(); ++i) acc *= letters[i];
        return s % 2 == 0 ? acc : -acc;
      }
      case Kind::JPlus:
      case Kind::JMinus: {
        const RotaBaxterSplit& p = *split_;
        AlgebraElement acc = letters[0];
        for (std::size_t i = 1; i < s; ++i) {
          acc = p.minus(acc);
          if (acc.is_zero()) return AlgebraElement::zero(target_);
          acc *= letters[i];
        }
        if (kind_ == Kind::JMinus) {
          AlgebraElement v = p.minus(acc);
          return s % 2 == 0 ? v : -v;
        }
        AlgebraElement v = p.plus(acc);
        return s % 2 == 1 ? v : -v;
      }
      case Kind::Custom: {
        if (max_support_ && s > *max_support_) return AlgebraElement::zero(target_);
        return (*this)(detail::expand_word(letters));
      }
    }
    throw Error("unreachable functional kind");
  }

 private:
  StuffleFunctional(Kind kind, BasisKind target) : kind_(kind), target_(target) {}

  Kind kind_;
  BasisKind target_;
  std::optional<RotaBaxterSplit> split_;
  std::shared_ptr<const Rule> rule_;
  std::optional<std::size_t> max_support_;
};

inline AlgebraElement eval_functional(const StuffleFunctional& f, const StuffleElement& x) { return f(x); }

namespace detail {

inline StuffleWord subword(const StuffleWord& w, std::size_t from, std::size_t to) {
  return StuffleWord(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

inline void check_same_target(const StuffleFunctional& f, const StuffleFunctional& g) {
  if (f.target() != g.target()) throw BasisMismatch("functionals take values in different algebras");
}

inline std::optional<std::size_t> sum_support(const StuffleFunctional& f, const StuffleFunctional& g) {
  if (f.max_support() && g.max_support()) return *f.max_support() + *g.max_support();
  return std::nullopt;
}

}  // namespace detail

/// (f * g)(w) = sum over deconcatenations w = uv of f(u) g(v).
inline StuffleFunctional convolve(const StuffleFunctional& f, const StuffleFunctional& g) {
  detail::check_same_target(f, g);
  return StuffleFunctional::custom(
      f.target(),
      [f, g](const StuffleWord& w) {
        AlgebraElement out(f.target());
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
          const AlgebraElement a = f(detail::subword(w, 0, cut));
          if (a.is_zero()) continue;
          out += a * g(detail::subword(w, cut, w.size()));
        }
        return out;
      },
      detail::sum_support(f, g));
}

/// Inverse in U(A^st, A) by the degree recursion g(w) = -f(w) - sum_{w=uv, u,v != empty} g(u) f(v).
inline StuffleFunctional functional_inverse_recursive(const StuffleFunctional& f) {
  auto rule = std::make_shared<std::function<AlgebraElement(const StuffleWord&)>>();
  std::weak_ptr<std::function<AlgebraElement(const StuffleWord&)>> self = rule;
  *rule = [f, self](const StuffleWord& w) {
    auto g = self.lock();
    AlgebraElement out = -f(w);
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
      const AlgebraElement tail = f(detail::subword(w, cut, w.size()));
      if (tail.is_zero()) continue;
      out -= (*g)(detail::subword(w, 0, cut)) * tail;
    }
    return out;
  };
  // the shared_ptr is kept alive by the returned functional's own copy of the closure
  return StuffleFunctional::custom(f.target(), [rule](const StuffleWord& w) { return (*rule)(w); });
}

/// Inverse in U(A^st, A) as e + sum_k (e - f)^{*k}, i.e.
/// sum over compositions w = w^1...w^k of (-1)^k f(w^1)...f(w^k).
inline StuffleFunctional functional_inverse_series(const StuffleFunctional& f) {
  return StuffleFunctional::custom(f.target(), [f](const StuffleWord& w) {
    AlgebraElement out(f.target());
    for_each_composition(w.size(), [&](const std::vector<std::size_t>& ends) {
      AlgebraElement term = AlgebraElement::one(f.target());
      std::size_t start = 0;
      for (std::size_t e : ends) {
        term *= f(detail::subword(w, start, e));
        if (term.is_zero()) return;
        start = e;
      }
      out += ends.size() % 2 == 0 ? term : -term;
    });
    return out;
  });
}

/// Bogoliubov preparation of a functional on A^st:
///   f_bar(w) = f(w) - sum_{w=uv, u,v != empty} p_-(f_bar(u)) f(v).
inline StuffleFunctional functional_bogoliubov(const StuffleFunctional& f, const RotaBaxterSplit& split) {
  auto rule = std::make_shared<std::function<AlgebraElement(const StuffleWord&)>>();
  std::weak_ptr<std::function<AlgebraElement(const StuffleWord&)>> self = rule;
  *rule = [f, split, self](const StuffleWord& w) {
    auto bar = self.lock();
    AlgebraElement out = f(w);
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
      const AlgebraElement tail = f(detail::subword(w, cut, w.size()));
      if (tail.is_zero()) continue;
      out -= split.minus((*bar)(detail::subword(w, 0, cut))) * tail;
    }
    return out;
  };
  return StuffleFunctional::custom(f.target(), [rule](const StuffleWord& w) { return (*rule)(w); });
}

/// Bogoliubov preparation of j through its closed recursion:
///   j_bar(a1) = a1,  j_bar(a1...ar) = -p_-(j_bar(a1...a_{r-1})) ar.
inline AlgebraElement bogoliubov_j(const RotaBaxterSplit& split, const StuffleWord& w) {
  if (w.empty()) return AlgebraElement::one(BasisKind::Laurent);
  AlgebraElement acc = AlgebraElement::term(w[0]);
  for (std::size_t r = 1; r < w.size(); ++r) acc = -(split.minus(acc) * AlgebraElement::term(w[r]));
  return acc;
}

// ---------------------------------------------------------------------------
// The action T(F, phi) = F o phi^st o iota

namespace detail {

inline void check_action(const StuffleFunctional& f, const UnitalLinMap& phi) {
  if (f.target() != phi.kind()) throw BasisMismatch("functional and map take values in different algebras");
}

}  // namespace detail

/// T(F, phi), folding each word of iota(h) through F letter by letter.
inline UnitalLinMap apply_T(const StuffleFunctional& f, const UnitalLinMap& phi) {
  detail::check_action(f, phi);
  const auto& spec = phi.spec();
  std::map<HopfMonomial, AlgebraElement> values;
  std::vector<AlgebraElement> letters;
  for (const auto& m : spec.monomials()) {
    AlgebraElement v(phi.kind());
    for (const auto& [w, c] : iota(spec, m)) {
      letters.clear();
      for (const auto& letter : w) letters.push_back(phi(letter));
      v += f.on_letters(letters) * c;
    }
    values.emplace(m, std::move(v));
  }
  return UnitalLinMap(phi.spec_ptr(), phi.kind(), std::move(values));
}

/// T(F, phi) through the literal composite: materialize phi^st(iota(h)) in A^st,
/// then evaluate F on basis words.
inline UnitalLinMap apply_T_materialized(const StuffleFunctional& f, const UnitalLinMap& phi) {
  detail::check_action(f, phi);
  const auto& spec = phi.spec();
  std::map<HopfMonomial, AlgebraElement> values;
  for (const auto& m : spec.monomials()) values.emplace(m, f(lift_character(phi, iota(spec, m))));
  return UnitalLinMap(phi.spec_ptr(), phi.kind(), std::move(values));
}

/// f (.) g = T(f, g) with H = A^st itself: iota on a word sums over its
/// compositions into nonempty blocks, and g^st evaluates each block.
inline StuffleFunctional odot(const StuffleFunctional& f, const StuffleFunctional& g) {
  detail::check_same_target(f, g);
  return StuffleFunctional::custom(f.target(), [f, g](const StuffleWord& w) {
    AlgebraElement out(f.target());
    std::vector<AlgebraElement> letters;
    for_each_composition(w.size(), [&](const std::vector<std::size_t>& ends) {
      letters.clear();
      std::size_t start = 0;
      for (std::size_t e : ends) {
        letters.push_back(g(detail::subword(w, start, e)));
        start = e;
      }
      out += f.on_letters(letters);
    });
    return out;
  });
}

/// phi^{*-1} = T(j^{*-1}, phi).
inline UnitalLinMap closed_inverse(const UnitalLinMap& phi) {
  return apply_T(StuffleFunctional::j_inverse(phi.kind()), phi);
}

/// phi_- = T(j_-, phi), phi_+ = T(j_+, phi).
inline BrbDecomposition closed_brb(const UnitalLinMap& phi, const RotaBaxterSplit& split) {
  return {apply_T(StuffleFunctional::j_plus(split, phi.kind()), phi),
          apply_T(StuffleFunctional::j_minus(split, phi.kind()), phi)};
}

}  // namespace brb
