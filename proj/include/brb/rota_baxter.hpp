#pragma once

#include "brb/algebra.hpp"

namespace brb {

/// Splitting A = A_+ (+) A_- into two subalgebras; p_+ projects onto A_+
/// parallel to A_-, and p_- = Id - p_+.
///
/// PolePart is the minimal-subtraction split on Laurent polynomials:
/// A_- = span{e^n : n < 0} (non-unital), A_+ = span{e^n : n >= 0}.
/// TrivialPlus takes A_+ = A, A_- = 0.
class RotaBaxterSplit {
 public:
  enum class Kind { PolePart, TrivialPlus };

  constexpr RotaBaxterSplit() = default;
  constexpr explicit RotaBaxterSplit(Kind kind) : kind_(kind) {}

  static constexpr RotaBaxterSplit pole_part() { return RotaBaxterSplit(Kind::PolePart); }
  static constexpr RotaBaxterSplit trivial_plus() { return RotaBaxterSplit(Kind::TrivialPlus); }

  constexpr Kind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return kind_ == Kind::PolePart ? "pole" : "trivial"; }

  AlgebraElement minus(const AlgebraElement& x) const {
    if (kind_ == Kind::TrivialPlus) return AlgebraElement::zero(x.kind());
    if (x.kind() != BasisKind::Laurent)
      throw BasisMismatch("pole-part split applied to a free-commutative element");
    AlgebraElement out(BasisKind::Laurent);
    for (const auto& [m, c] : x.terms()) {
      if (m.exponent() >= 0) break;  // terms are sorted by exponent
      out.add_term(m, c);
    }
    return out;
  }

  AlgebraElement plus(const AlgebraElement& x) const { return x - minus(x); }

  /// True when x lies in A_+ (equivalently p_-(x) = 0).
  bool in_plus(const AlgebraElement& x) const { return minus(x).is_zero(); }
  /// True when x lies in A_- (equivalently p_+(x) = 0).
  bool in_minus(const AlgebraElement& x) const { return plus(x).is_zero(); }

  friend constexpr bool operator==(RotaBaxterSplit, RotaBaxterSplit) = default;

 private:
  Kind kind_ = Kind::PolePart;
};

inline AlgebraElement rb_minus(const RotaBaxterSplit& split, const AlgebraElement& x) {
  return split.minus(x);
}

inline AlgebraElement rb_plus(const RotaBaxterSplit& split, const AlgebraElement& x) {
  return split.plus(x);
}

/// p+(x)p+(y) + p+(xy) == p+(x p+(y)) + p+(p+(x) y), exactly.
inline bool rb_identity_check(const RotaBaxterSplit& split, const AlgebraElement& x,
                              const AlgebraElement& y) {
  const AlgebraElement px = split.plus(x);
  const AlgebraElement py = split.plus(y);
  return px * py + split.plus(x * y) == split.plus(x * py) + split.plus(px * y);
}

}  // namespace brb
