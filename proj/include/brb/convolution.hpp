#pragma once

// The convolution algebra L(H, A), its group U(H, A) of maps sending 1_H to
// 1_A, characters C(H, A), and the recursive constructions built on the
// filtration: inverse, Bogoliubov preparation and the Birkhoff-Rota-Baxter
// factorization phi_- * phi = phi_+.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brb/algebra.hpp"
#include "brb/errors.hpp"
#include "brb/hopf.hpp"
#include "brb/rota_baxter.hpp"

namespace brb {

inline bool same_spec(const HopfAlgebraSpec& a, const HopfAlgebraSpec& b) {
  return &a == &b || (a.name() == b.name() && a.truncation() == b.truncation() &&
                      a.convention() == b.convention() && a.generators().size() == b.generators().size());
}

/// Element of U(H, A), stored densely on every basis monomial of degree 1..N;
/// the value at 1_H is 1_A.
class UnitalLinMap {
 public:
  UnitalLinMap(HopfSpecPtr spec, BasisKind kind, std::map<HopfMonomial, AlgebraElement> values)
      : spec_(std::move(spec)), kind_(kind) {
    if (!spec_) throw Error("UnitalLinMap needs a Hopf algebra");
    for (auto& [m, v] : values) {
      if (v.kind() != kind_) throw BasisMismatch("value at " + spec_->render(m) + " has the wrong basis kind");
      spec_->check_degree(m);
      if (m.is_unit()) {
        if (!(v == AlgebraElement::one(kind_))) throw Error("a unital map must send 1_H to 1_A");
        continue;
      }
      if (!v.is_zero()) values_.emplace(m, std::move(v));
    }
  }

  /// Tabulates f on every monomial of degree 1..N.
  template <class F>
  static UnitalLinMap from_function(HopfSpecPtr spec, BasisKind kind, F&& f) {
    std::map<HopfMonomial, AlgebraElement> values;
    for (const auto& m : spec->monomials()) values.emplace(m, f(m));
    return UnitalLinMap(std::move(spec), kind, std::move(values));
  }

  const HopfAlgebraSpec& spec() const noexcept { return *spec_; }
  const HopfSpecPtr& spec_ptr() const noexcept { return spec_; }
  BasisKind kind() const noexcept { return kind_; }

  AlgebraElement operator()(const HopfMonomial& m) const {
    if (m.is_unit()) return AlgebraElement::one(kind_);
    spec_->check_degree(m);
    auto it = values_.find(m);
    return it == values_.end() ? AlgebraElement::zero(kind_) : it->second;
  }

  AlgebraElement operator()(const HopfElement& x) const {
    AlgebraElement out(kind_);
    for (const auto& [m, c] : x) out += (*this)(m) * c;
    return out;
  }

  /// Nonzero values on H' (zero values are not stored).
  const std::map<HopfMonomial, AlgebraElement>& values() const noexcept { return values_; }

  friend bool operator==(const UnitalLinMap& f, const UnitalLinMap& g) {
    return same_spec(*f.spec_, *g.spec_) && f.kind_ == g.kind_ && f.values_ == g.values_;
  }

 private:
  HopfSpecPtr spec_;
  BasisKind kind_;
  std::map<HopfMonomial, AlgebraElement> values_;
};

/// Algebra morphism H -> A, determined by its generator values.
class Character {
 public:
  Character(HopfSpecPtr spec, BasisKind kind, std::map<std::size_t, AlgebraElement> generator_values)
      : spec_(std::move(spec)), kind_(kind), values_(std::move(generator_values)) {
    if (!spec_) throw Error("Character needs a Hopf algebra");
    for (const auto& [g, v] : values_) {
      spec_->generator_monomial(g);
      if (v.kind() != kind_) throw BasisMismatch("character value has the wrong basis kind");
    }
  }

  /// Reads the generator values of a map (assumed multiplicative).
  static Character from_map(const UnitalLinMap& f) {
    std::map<std::size_t, AlgebraElement> values;
    for (std::size_t g = 0; g < f.spec().generators().size(); ++g)
      values.emplace(g, f(HopfMonomial::generator(g)));
    return Character(f.spec_ptr(), f.kind(), std::move(values));
  }

  const HopfAlgebraSpec& spec() const noexcept { return *spec_; }
  const HopfSpecPtr& spec_ptr() const noexcept { return spec_; }
  BasisKind kind() const noexcept { return kind_; }

  AlgebraElement generator_value(std::size_t g) const {
    auto it = values_.find(g);
    return it == values_.end() ? AlgebraElement::zero(kind_) : it->second;
  }

  AlgebraElement operator()(const HopfMonomial& m) const {
    AlgebraElement out = AlgebraElement::one(kind_);
    for (std::size_t g : m.generators()) out *= generator_value(g);
    return out;
  }

  /// Multiplicative extension to every monomial up to the truncation degree.
  UnitalLinMap to_map() const {
    // products are built from the lower-degree factor m / g to reuse work
    std::map<HopfMonomial, AlgebraElement> values;
    for (const auto& m : spec_->monomials()) {
      const auto& gens = m.generators();
      if (gens.size() == 1) {
        values.emplace(m, generator_value(gens[0]));
        continue;
      }
      std::vector<std::size_t> rest(gens.begin() + 1, gens.end());
      values.emplace(m, values.at(HopfMonomial(rest)) * generator_value(gens[0]));
    }
    return UnitalLinMap(spec_, kind_, std::move(values));
  }

 private:
  HopfSpecPtr spec_;
  BasisKind kind_;
  std::map<std::size_t, AlgebraElement> values_;
};

namespace detail {

inline void check_compatible(const UnitalLinMap& f, const UnitalLinMap& g) {
  if (!same_spec(f.spec(), g.spec())) throw SpecMismatch("maps are defined on different Hopf algebras");
  if (f.kind() != g.kind()) throw BasisMismatch("maps take values in different target algebras");
}

/// m_A o (f (x) g) o Delta on every monomial of degree 1..N, for arbitrary
/// (not necessarily unital) f, g given as callables on monomials including 1_H.
template <class F, class G>
std::map<HopfMonomial, AlgebraElement> convolve_tables(const HopfAlgebraSpec& spec, BasisKind kind, F&& f,
                                                       G&& g) {
  std::map<HopfMonomial, AlgebraElement> out;
  for (const auto& m : spec.monomials()) {
    AlgebraElement v(kind);
    for (const auto& [pair, c] : spec.coproduct(m)) {
      const AlgebraElement a = f(pair.first);
      if (a.is_zero()) continue;
      v += a * g(pair.second) * c;
    }
    out.emplace(m, std::move(v));
  }
  return out;
}

}  // namespace detail

/// (f * g)(h) = m_A o (f (x) g) o Delta(h).
inline UnitalLinMap convolve(const UnitalLinMap& f, const UnitalLinMap& g) {
  detail::check_compatible(f, g);
  return UnitalLinMap(f.spec_ptr(), f.kind(), detail::convolve_tables(f.spec(), f.kind(), f, g));
}

/// u_A o eta: 1_H -> 1_A, H' -> 0.
inline UnitalLinMap convolution_unit(HopfSpecPtr spec, BasisKind kind) {
  return UnitalLinMap(std::move(spec), kind, {});
}

/// Degree-by-degree solution of g * f = e:
///   g(h) = -f(h) - sum g(h'_(1)) f(h'_(2)).
inline UnitalLinMap inverse_recursive(const UnitalLinMap& f) {
  const auto& spec = f.spec();
  std::map<HopfMonomial, AlgebraElement> g;
  for (const auto& m : spec.monomials()) {
    AlgebraElement v = -f(m);
    for (const auto& [pair, c] : spec.reduced_coproduct(m)) v -= g.at(pair.first) * f(pair.second) * c;
    g.emplace(m, std::move(v));
  }
  return UnitalLinMap(f.spec_ptr(), f.kind(), std::move(g));
}

/// f^{*-1} = e + sum_{k>=1} (e - f)^{*k}; on H'_n the k-th power vanishes for k > n,
/// so the sum stops at the truncation degree.
inline UnitalLinMap inverse_series(const UnitalLinMap& f) {
  const auto& spec = f.spec();
  const BasisKind kind = f.kind();
  // e - f vanishes on 1_H
  auto defect = [&](const HopfMonomial& m) { return m.is_unit() ? AlgebraElement::zero(kind) : -f(m); };
  std::map<HopfMonomial, AlgebraElement> power;
  for (const auto& m : spec.monomials()) power.emplace(m, defect(m));
  std::map<HopfMonomial, AlgebraElement> total = power;
  for (int k = 2; k <= spec.truncation(); ++k) {
    auto previous = [&](const HopfMonomial& m) {
      return m.is_unit() ? AlgebraElement::zero(kind) : power.at(m);
    };
    power = detail::convolve_tables(spec, kind, previous, defect);
    for (auto& [m, v] : power) total.at(m) += v;
  }
  return UnitalLinMap(f.spec_ptr(), kind, std::move(total));
}

/// f(m1 m2) == f(m1) f(m2) for every monomial pair with deg m1 + deg m2 <= max_degree.
inline bool is_character(const UnitalLinMap& f, int max_degree) {
  const auto& spec = f.spec();
  const int bound = std::min(max_degree, spec.truncation());
  const auto& monos = spec.monomials();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const int di = spec.degree(monos[i]);
    for (std::size_t j = i; j < monos.size(); ++j) {
      if (di + spec.degree(monos[j]) > bound) continue;
      if (!(f(monos[i] * monos[j]) == f(monos[i]) * f(monos[j]))) return false;
    }
  }
  return true;
}

/// phi_bar(h) = phi(h) - sum p_-(phi_bar(h'_(1))) phi(h'_(2)).
inline UnitalLinMap bogoliubov_prepare(const UnitalLinMap& phi, const RotaBaxterSplit& split) {
  const auto& spec = phi.spec();
  std::map<HopfMonomial, AlgebraElement> bar;
  std::map<HopfMonomial, AlgebraElement> bar_minus;
  for (const auto& m : spec.monomials()) {
    AlgebraElement v = phi(m);
    for (const auto& [pair, c] : spec.reduced_coproduct(m)) {
      const AlgebraElement& pm = bar_minus.at(pair.first);
      if (pm.is_zero()) continue;
      v -= pm * phi(pair.second) * c;
    }
    bar_minus.emplace(m, split.minus(v));
    bar.emplace(m, std::move(v));
  }
  return UnitalLinMap(phi.spec_ptr(), phi.kind(), std::move(bar));
}

struct BrbDecomposition {
  UnitalLinMap plus;
  UnitalLinMap minus;
};

/// phi_+ = p_+ o phi_bar, phi_- = -p_- o phi_bar on H'.
inline BrbDecomposition brb_recursive(const UnitalLinMap& phi, const RotaBaxterSplit& split) {
  const UnitalLinMap bar = bogoliubov_prepare(phi, split);
  std::map<HopfMonomial, AlgebraElement> plus, minus;
  for (const auto& m : phi.spec().monomials()) {
    const AlgebraElement v = bar(m);
    plus.emplace(m, split.plus(v));
    minus.emplace(m, -split.minus(v));
  }
  return {UnitalLinMap(phi.spec_ptr(), phi.kind(), std::move(plus)),
          UnitalLinMap(phi.spec_ptr(), phi.kind(), std::move(minus))};
}

/// True when every value on H' lies in A_+ (plus = true) or in A_- (plus = false).
inline bool in_sector(const UnitalLinMap& f, const RotaBaxterSplit& split, bool plus) {
  for (const auto& [m, v] : f.values())
    if (plus ? !split.in_plus(v) : !split.in_minus(v)) return false;
  return true;
}

/// First monomial (in canonical order) where two maps differ, if any.
inline std::optional<HopfMonomial> first_difference(const UnitalLinMap& f, const UnitalLinMap& g) {
  for (const auto& m : f.spec().monomials())
    if (!(f(m) == g(m))) return m;
  return std::nullopt;
}

}  // namespace brb
