#pragma once

#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

namespace brb {

/// Exact rational scalar. gmpxx keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Finite formal linear combination of basis keys with rational coefficients.
/// Zero coefficients are never stored, so equality is plain map equality.
template <class Key, class Compare = std::less<Key>>
class Linear {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename map_type::const_iterator;

  Linear() = default;
  explicit Linear(Key key, const Rational& coefficient = 1) { add(std::move(key), coefficient); }

  void add(const Key& key, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(Key&& key, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coefficient);
    } else {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  Linear& operator+=(const Linear& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Linear& operator-=(const Linear& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  Linear& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Linear operator+(Linear a, const Linear& b) { return a += b; }
  friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
  friend Linear operator-(Linear a) { return a *= Rational(-1); }
  friend Linear operator*(Linear a, const Rational& s) { return a *= s; }
  friend Linear operator*(const Rational& s, Linear a) { return a *= s; }
  friend bool operator==(const Linear& a, const Linear& b) { return a.terms_ == b.terms_; }

  /// Image under a linear map given on basis keys.
  template <class F>
  auto transform(F&& f) const {
    using Out = std::invoke_result_t<F&, const Key&>;
    Out out{};
    for (const auto& [k, c] : terms_) out += f(k) * c;
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace brb
