#pragma once

// Commutative target algebras A: Laurent polynomials in e (the regulator)
// and free commutative polynomials in named symbols. Both carry a
// multiplicative monomial basis, so the product of two basis elements is again
// a basis element and words over the basis stay canonical.

#include <algorithm>
#include <cctype>
#include <compare>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "brb/errors.hpp"
#include "brb/linear.hpp"

namespace brb {

enum class BasisKind { Laurent, FreeCommutative };

inline const char* to_string(BasisKind kind) {
  return kind == BasisKind::Laurent ? "laurent" : "free-commutative";
}

struct LaurentPower {
  int exponent = 0;
  friend auto operator<=>(const LaurentPower&, const LaurentPower&) = default;
};

/// Sorted multiset of symbol names; the empty multiset is the unit.
struct SymbolProduct {
  std::vector<std::string> symbols;
  friend auto operator<=>(const SymbolProduct&, const SymbolProduct&) = default;
};

class Monomial {
 public:
  Monomial() : value_(LaurentPower{0}) {}

  static Monomial laurent(int exponent) { return Monomial(LaurentPower{exponent}); }

  static Monomial symbols(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    return Monomial(SymbolProduct{std::move(names)});
  }

  static Monomial unit(BasisKind kind) {
    return kind == BasisKind::Laurent ? laurent(0) : symbols({});
  }

  BasisKind kind() const noexcept {
    return std::holds_alternative<LaurentPower>(value_) ? BasisKind::Laurent
                                                        : BasisKind::FreeCommutative;
  }

  bool is_unit() const noexcept {
    if (auto* p = std::get_if<LaurentPower>(&value_)) return p->exponent == 0;
    return std::get<SymbolProduct>(value_).symbols.empty();
  }

  int exponent() const {
    if (auto* p = std::get_if<LaurentPower>(&value_)) return p->exponent;
    throw BasisMismatch("exponent() requested on a free-commutative monomial");
  }

  const std::vector<std::string>& symbol_list() const {
    if (auto* p = std::get_if<SymbolProduct>(&value_)) return p->symbols;
    throw BasisMismatch("symbol_list() requested on a Laurent monomial");
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.kind() != b.kind()) throw BasisMismatch("monomial product across basis kinds");
    if (a.kind() == BasisKind::Laurent) return laurent(a.exponent() + b.exponent());
    const auto& x = a.symbol_list();
    const auto& y = b.symbol_list();
    std::vector<std::string> merged;
    merged.reserve(x.size() + y.size());
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(merged));
    return Monomial(SymbolProduct{std::move(merged)});
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  explicit Monomial(LaurentPower p) : value_(p) {}
  explicit Monomial(SymbolProduct p) : value_(std::move(p)) {}

  std::variant<LaurentPower, SymbolProduct> value_;
};

inline std::string to_string(const Monomial& m);

/// Element of a commutative target algebra: a sparse rational combination of
/// monomials that all share one basis kind.
class AlgebraElement {
 public:
  explicit AlgebraElement(BasisKind kind = BasisKind::Laurent) : kind_(kind) {}

  static AlgebraElement zero(BasisKind kind) { return AlgebraElement(kind); }
  static AlgebraElement one(BasisKind kind) { return constant(kind, 1); }

  static AlgebraElement constant(BasisKind kind, const Rational& c) {
    return term(Monomial::unit(kind), c);
  }

  static AlgebraElement term(const Monomial& m, const Rational& c = 1) {
    AlgebraElement out(m.kind());
    out.terms_.add(m, c);
    return out;
  }

  /// c * e^exponent
  static AlgebraElement laurent(int exponent, const Rational& c = 1) {
    return term(Monomial::laurent(exponent), c);
  }

  static AlgebraElement symbol(const std::string& name, const Rational& c = 1) {
    return term(Monomial::symbols({name}), c);
  }

  BasisKind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  const Linear<Monomial>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const { return terms_.coefficient(m); }

  void add_term(const Monomial& m, const Rational& c) {
    check_kind(m.kind());
    terms_.add(m, c);
  }

  AlgebraElement& operator+=(const AlgebraElement& y) {
    check_kind(y.kind_);
    terms_ += y.terms_;
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& y) {
    check_kind(y.kind_);
    terms_ -= y.terms_;
    return *this;
  }
  AlgebraElement& operator*=(const Rational& s) {
    terms_ *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator-(AlgebraElement x) { return x *= Rational(-1); }
  friend AlgebraElement operator*(AlgebraElement x, const Rational& s) { return x *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement x) { return x *= s; }

  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check_kind(y.kind_);
    AlgebraElement out(x.kind_);
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) out.terms_.add(mx * my, cx * cy);
    return out;
  }

  AlgebraElement& operator*=(const AlgebraElement& y) { return *this = *this * y; }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.kind_ == y.kind_ && x.terms_ == y.terms_;
  }

  /// Smallest/largest exponent present; only meaningful for nonzero Laurent elements.
  int min_exponent() const { return terms_.begin()->first.exponent(); }
  int max_exponent() const { return std::prev(terms_.end())->first.exponent(); }

 private:
  void check_kind(BasisKind other) const {
    if (other != kind_)
      throw BasisMismatch(std::string("basis kind mismatch: ") + brb::to_string(kind_) + " vs " +
                          brb::to_string(other));
  }

  BasisKind kind_;
  Linear<Monomial> terms_;
};

inline AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }
inline AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

/// x^n for n >= 0.
inline AlgebraElement power(const AlgebraElement& x, int n) {
  AlgebraElement out = AlgebraElement::one(x.kind());
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

// ---------------------------------------------------------------------------
// Text form:  -1/2*e^-2 + 3 + e     or     2*a^2*b - c + 1/3

inline std::string to_string(const Monomial& m) {
  if (m.kind() == BasisKind::Laurent) {
    const int k = m.exponent();
    if (k == 0) return "1";
    if (k == 1) return "e";
    return "e^" + std::to_string(k);
  }
  const auto& s = m.symbol_list();
  if (s.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out += '*';
    out += s[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace detail {

inline std::string render_term(const Monomial& m, const Rational& c) {
  if (m.is_unit()) return to_string(c);
  if (c == 1) return to_string(m);
  if (c == -1) return "-" + to_string(m);
  return to_string(c) + "*" + to_string(m);
}

}  // namespace detail

inline std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (first) {
      out = detail::render_term(m, c);
      first = false;
    } else if (c < 0) {
      out += " - " + detail::render_term(m, -c);
    } else {
      out += " + " + detail::render_term(m, c);
    }
  }
  return out;
}

namespace detail {

class ElementParser {
 public:
  ElementParser(std::string_view text, BasisKind kind) : text_(text), kind_(kind) {}

  AlgebraElement parse() {
    AlgebraElement out(kind_);
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, c] = parse_term();
      out.add_term(m, sign * c);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Rational coeff = 1;
    Monomial mono = Monomial::unit(kind_);
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        mono = mono * parse_factor();
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {mono, coeff};
  }

  Rational parse_number() {
    Rational num(parse_digits());
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      mpz_class den(parse_digits());
      if (den == 0) fail_at("zero denominator", at);
      num /= Rational(den);
    }
    return num;
  }

  mpz_class parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Monomial parse_factor() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = parse_exponent();
    }
    if (kind_ == BasisKind::Laurent) {
      if (name != "e" && name != "eps") fail_at("unknown symbol '" + name + "' in Laurent element", start);
      return Monomial::laurent(exponent);
    }
    if (exponent < 0) fail_at("negative exponent in free-commutative element", start);
    return Monomial::symbols(std::vector<std::string>(static_cast<std::size_t>(exponent), name));
  }

  int parse_exponent() {
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      ++pos_;
    }
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    const std::size_t start = pos_;
    mpz_class value = parse_digits();
    if (!value.fits_sint_p()) fail_at("exponent out of range", start);
    if (paren) {
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return sign * static_cast<int>(value.get_si());
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError("cannot parse '" + std::string(text_) + "': " + msg, at);
  }

  std::string_view text_;
  BasisKind kind_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the grammar produced by to_string(AlgebraElement). Laurent elements
/// use the single symbol `e` (or `eps`); negative exponents may be written
/// `e^-2` or `e^(-2)`.
inline AlgebraElement parse_algebra_element(std::string_view text, BasisKind kind) {
  return detail::ElementParser(text, kind).parse();
}

}  // namespace brb
