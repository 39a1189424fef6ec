#pragma once

// Identity-tangent formal diffeomorphisms f(x) = x + sum_{n>=2} f_n x^n with
// Laurent coefficients, and their Birkhoff factorization f_- o f = f_+ through
// the Faa di Bruno Hopf algebra.

#include <map>
#include <string>
#include <utility>

#include "brb/algebra.hpp"
#include "brb/convolution.hpp"
#include "brb/errors.hpp"
#include "brb/hopf.hpp"
#include "brb/rota_baxter.hpp"
#include "brb/series.hpp"
#include "brb/universal.hpp"

namespace brb {

class FormalDiffeo {
 public:
  /// Coefficients f_n for 2 <= n <= order; absent entries are zero.
  FormalDiffeo(int order, std::map<int, AlgebraElement> coefficients, BasisKind kind = BasisKind::Laurent)
      : order_(order), kind_(kind) {
    if (order < 1) throw Error("diffeomorphism order must be >= 1");
    for (auto& [n, c] : coefficients) {
      if (n < 2 || n > order)
        throw TruncationError("coefficient index " + std::to_string(n) + " outside [2, " +
                              std::to_string(order) + "]");
      if (c.kind() != kind) throw BasisMismatch("diffeomorphism coefficient has the wrong basis kind");
      if (!c.is_zero()) coefficients_.emplace(n, std::move(c));
    }
  }

  static FormalDiffeo identity(int order, BasisKind kind = BasisKind::Laurent) { return {order, {}, kind}; }

  static FormalDiffeo from_series(const TruncatedSeries& s) {
    if (!s[0].is_zero()) throw Error("series has a nonzero constant term");
    if (s.order() >= 1 && !(s[1] == AlgebraElement::one(s.kind())))
      throw Error("series is not identity-tangent");
    std::map<int, AlgebraElement> c;
    for (int n = 2; n <= s.order(); ++n) c.emplace(n, s[n]);
    return FormalDiffeo(s.order(), std::move(c), s.kind());
  }

  int order() const noexcept { return order_; }
  BasisKind kind() const noexcept { return kind_; }

  /// Coefficient of x^n (n >= 0).
  AlgebraElement coefficient(int n) const {
    if (n == 1) return AlgebraElement::one(kind_);
    auto it = coefficients_.find(n);
    return it == coefficients_.end() ? AlgebraElement::zero(kind_) : it->second;
  }

  const std::map<int, AlgebraElement>& coefficients() const noexcept { return coefficients_; }

  TruncatedSeries series() const {
    TruncatedSeries s = TruncatedSeries::identity(kind_, order_);
    for (const auto& [n, c] : coefficients_) s[n] = c;
    return s;
  }

  friend bool operator==(const FormalDiffeo& a, const FormalDiffeo& b) {
    return a.order_ == b.order_ && a.kind_ == b.kind_ && a.coefficients_ == b.coefficients_;
  }

 private:
  int order_;
  BasisKind kind_;
  std::map<int, AlgebraElement> coefficients_;
};

inline std::string to_string(const FormalDiffeo& f) {
  std::string out = "x";
  for (const auto& [n, c] : f.coefficients()) out += " + (" + to_string(c) + ")*x^" + std::to_string(n);
  return out;
}

/// (f o g)(x) = f(g(x)) mod x^{order+1}.
inline FormalDiffeo compose(const FormalDiffeo& f, const FormalDiffeo& g) {
  if (f.order() != g.order()) throw TruncationError("composition of diffeomorphisms of different orders");
  if (f.kind() != g.kind()) throw BasisMismatch("composition across coefficient algebras");
  return FormalDiffeo::from_series(compose_series(f.series(), g.series()));
}

/// g with g o f = f o g = x, solved coefficient by coefficient: with g_n unknown,
/// [x^n] f(g(x)) = g_n + (terms in g_2..g_{n-1}).
inline FormalDiffeo compositional_inverse(const FormalDiffeo& f) {
  const int order = f.order();
  TruncatedSeries g = TruncatedSeries::identity(f.kind(), order);
  const TruncatedSeries fs = f.series();
  for (int n = 2; n <= order; ++n) {
    const TruncatedSeries trial = compose_series(fs, g);
    g[n] = -trial[n];
  }
  return FormalDiffeo::from_series(g);
}

namespace detail {

inline void check_fdb(const HopfAlgebraSpec& spec) {
  if (spec.name() != "faadibruno") throw SpecMismatch("expected the Faa di Bruno Hopf algebra, got '" + spec.name() + "'");
}

}  // namespace detail

/// phi_f(a_n) = f_{n+1}; the coefficient of x^{n+1} sits on generator a_n of degree n.
inline Character diffeo_to_character(const FormalDiffeo& f, HopfSpecPtr spec) {
  detail::check_fdb(*spec);
  if (spec->truncation() < f.order() - 1)
    throw TruncationError("Faa di Bruno truncation " + std::to_string(spec->truncation()) +
                          " is below diffeomorphism order - 1 = " + std::to_string(f.order() - 1));
  std::map<std::size_t, AlgebraElement> values;
  for (std::size_t g = 0; g < spec->generators().size(); ++g) {
    const int n = static_cast<int>(g) + 2;
    values.emplace(g, n <= f.order() ? f.coefficient(n) : AlgebraElement::zero(f.kind()));
  }
  return Character(std::move(spec), f.kind(), std::move(values));
}

inline FormalDiffeo character_to_diffeo(const Character& phi, int order) {
  detail::check_fdb(phi.spec());
  if (phi.spec().truncation() < order - 1) throw TruncationError("character truncation below order - 1");
  std::map<int, AlgebraElement> c;
  for (int n = 2; n <= order; ++n) c.emplace(n, phi.generator_value(static_cast<std::size_t>(n - 2)));
  return FormalDiffeo(order, std::move(c), phi.kind());
}

inline FormalDiffeo map_to_diffeo(const UnitalLinMap& phi, int order) {
  return character_to_diffeo(Character::from_map(phi), order);
}

struct DiffeoFactorization {
  FormalDiffeo plus;
  FormalDiffeo minus;
};

enum class BrbRoute { Closed, Recursive };

/// f_- o f = f_+ with f_- coefficients in e^{-1}k[e^{-1}] and f_+ coefficients in k[e].
inline DiffeoFactorization birkhoff_factorize(const FormalDiffeo& f, const RotaBaxterSplit& split,
                                              BrbRoute route = BrbRoute::Closed,
                                              FdbOrientation orientation = FdbOrientation::OuterLeft) {
  const int n = std::max(1, f.order() - 1);
  const HopfSpecPtr spec = faa_di_bruno_spec(n, orientation);
  const UnitalLinMap phi = diffeo_to_character(f, spec).to_map();
  const BrbDecomposition d = route == BrbRoute::Closed ? closed_brb(phi, split) : brb_recursive(phi, split);
  return {map_to_diffeo(d.plus, f.order()), map_to_diffeo(d.minus, f.order())};
}

struct FactorizationReport {
  bool composed_equals_plus = false;
  bool minus_polar = false;
  bool plus_pole_free = false;
  bool ok() const { return composed_equals_plus && minus_polar && plus_pole_free; }
};

inline FactorizationReport verify_factorization(const FormalDiffeo& f, const DiffeoFactorization& d,
                                                const RotaBaxterSplit& split) {
  FactorizationReport r;
  r.composed_equals_plus = compose(d.minus, f) == d.plus;
  r.minus_polar = true;
  r.plus_pole_free = true;
  for (const auto& [n, c] : d.minus.coefficients()) r.minus_polar = r.minus_polar && split.in_minus(c);
  for (const auto& [n, c] : d.plus.coefficients()) r.plus_pole_free = r.plus_pole_free && split.in_plus(c);
  return r;
}

}  // namespace brb
