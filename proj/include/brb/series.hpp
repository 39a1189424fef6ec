#pragma once

#include <cstddef>
#include <vector>

#include "brb/algebra.hpp"
#include "brb/errors.hpp"

namespace brb {

/// Polynomial in x with AlgebraElement coefficients, truncated modulo x^{order+1}.
class TruncatedSeries {
 public:
  TruncatedSeries(BasisKind kind, int order)
      : kind_(kind), coefficients_(static_cast<std::size_t>(order) + 1, AlgebraElement::zero(kind)) {
    if (order < 0) throw Error("series order must be nonnegative");
  }

  /// The series x.
  static TruncatedSeries identity(BasisKind kind, int order) {
    TruncatedSeries s(kind, order);
    if (order >= 1) s[1] = AlgebraElement::one(kind);
    return s;
  }

  int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  BasisKind kind() const noexcept { return kind_; }

  AlgebraElement& operator[](int n) { return coefficients_.at(static_cast<std::size_t>(n)); }
  const AlgebraElement& operator[](int n) const { return coefficients_.at(static_cast<std::size_t>(n)); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries out(a.kind_, a.order());
    for (int n = 0; n <= a.order(); ++n) out[n] = a[n] + b[n];
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries out(a.kind_, a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.kind_ == b.kind_ && a.coefficients_ == b.coefficients_;
  }

 private:
  void check_compatible(const TruncatedSeries& b) const {
    if (b.kind_ != kind_) throw BasisMismatch("series over different coefficient algebras");
    if (b.order() != order()) throw TruncationError("series truncated at different orders");
  }

  BasisKind kind_;
  std::vector<AlgebraElement> coefficients_;
};

/// f(g(x)) mod x^{order+1}; g must have zero constant term.
inline TruncatedSeries compose_series(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!g[0].is_zero()) throw Error("inner series of a composition must vanish at x = 0");
  const int order = f.order();
  TruncatedSeries out(f.kind(), order);
  // Horner: (...((f_N) g + f_{N-1}) g + ...) g + f_0
  for (int k = order; k >= 0; --k) {
    out = out * g;
    out[0] += f[k];
  }
  return out;
}

}  // namespace brb
