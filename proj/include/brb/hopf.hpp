#pragma once

// Connected filtered Hopf algebras H = k1 (+) H' presented as free commutative
// polynomial algebras on graded generators. The only per-instance data is the
// reduced coproduct of each generator; coproducts of monomials follow from
// multiplicativity.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brb/algebra.hpp"
#include "brb/errors.hpp"
#include "brb/linear.hpp"
#include "brb/series.hpp"
#include "brb/words.hpp"

namespace brb {

struct HopfGenerator {
  std::string name;
  int degree = 1;
};

/// Multiset of generator indices; the empty multiset is 1_H.
class HopfMonomial {
 public:
  HopfMonomial() = default;
  explicit HopfMonomial(std::vector<std::size_t> generators) : generators_(std::move(generators)) {
    std::sort(generators_.begin(), generators_.end());
  }

  static HopfMonomial generator(std::size_t index) { return HopfMonomial({index}); }

  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  bool is_unit() const noexcept { return generators_.empty(); }

  friend HopfMonomial operator*(const HopfMonomial& a, const HopfMonomial& b) {
    std::vector<std::size_t> merged;
    merged.reserve(a.generators_.size() + b.generators_.size());
    std::merge(a.generators_.begin(), a.generators_.end(), b.generators_.begin(), b.generators_.end(),
               std::back_inserter(merged));
    HopfMonomial out;
    out.generators_ = std::move(merged);
    return out;
  }

  friend auto operator<=>(const HopfMonomial&, const HopfMonomial&) = default;
  friend bool operator==(const HopfMonomial&, const HopfMonomial&) = default;

 private:
  std::vector<std::size_t> generators_;
};

using HopfElement = Linear<HopfMonomial>;
using HopfTensor = Linear<std::pair<HopfMonomial, HopfMonomial>>;
/// Words over H' basis monomials; also used for n-fold tensors of H.
using HopfWord = Word<HopfMonomial>;
using HopfWordElement = WordElement<HopfMonomial>;

inline HopfElement unit_element() { return HopfElement(HopfMonomial{}); }

/// Componentwise product in H (x) H.
inline HopfTensor tensor_product(const HopfTensor& x, const HopfTensor& y) {
  HopfTensor out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add({a.first * b.first, a.second * b.second}, ca * cb);
  return out;
}

struct CoproductTerm {
  HopfMonomial left;
  HopfMonomial right;
  Rational coefficient;
};

class HopfAlgebraSpec {
 public:
  /// reduced_table[i] lists Delta(g_i) - 1 (x) g_i - g_i (x) 1.
  HopfAlgebraSpec(std::string name, std::vector<HopfGenerator> generators,
                  std::vector<std::vector<CoproductTerm>> reduced_table, int truncation,
                  std::string convention = {})
      : name_(std::move(name)),
        generators_(std::move(generators)),
        reduced_table_(std::move(reduced_table)),
        truncation_(truncation),
        convention_(std::move(convention)) {
    validate();
    enumerate_monomials();
    build_coproducts();
    if (!check_coassociativity(truncation_))
      throw Error("coproduct table of '" + name_ + "' is not coassociative up to degree " +
                  std::to_string(truncation_));
  }

  const std::string& name() const noexcept { return name_; }
  int truncation() const noexcept { return truncation_; }
  const std::vector<HopfGenerator>& generators() const noexcept { return generators_; }
  const std::vector<std::vector<CoproductTerm>>& reduced_table() const noexcept { return reduced_table_; }
  /// Tensor-orientation note for instances where it matters (empty otherwise).
  const std::string& convention() const noexcept { return convention_; }

  int degree(const HopfMonomial& m) const {
    int d = 0;
    for (std::size_t g : m.generators()) {
      if (g >= generators_.size()) throw Error("generator index out of range in '" + name_ + "'");
      d += generators_[g].degree;
    }
    return d;
  }

  /// Largest degree among the terms (0 for the zero element).
  int degree(const HopfElement& x) const {
    int d = 0;
    for (const auto& [m, c] : x) d = std::max(d, degree(m));
    return d;
  }

  /// All monomials of degree 1..N, by nondecreasing degree and then canonical order.
  const std::vector<HopfMonomial>& monomials() const noexcept { return monomials_; }

  std::vector<HopfMonomial> monomials_of_degree(int d) const {
    std::vector<HopfMonomial> out;
    for (const auto& m : monomials_)
      if (degree(m) == d) out.push_back(m);
    return out;
  }

  HopfMonomial generator_monomial(std::size_t index) const {
    if (index >= generators_.size()) throw Error("no generator with index " + std::to_string(index));
    return HopfMonomial::generator(index);
  }

  std::size_t generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i].name == name) return i;
    throw Error("unknown generator '" + std::string(name) + "' in Hopf algebra '" + name_ + "'");
  }

  const HopfTensor& coproduct(const HopfMonomial& m) const {
    check_degree(m);
    return coproducts_.at(m);
  }

  HopfTensor coproduct(const HopfElement& x) const {
    HopfTensor out;
    for (const auto& [m, c] : x) out += coproduct(m) * c;
    return out;
  }

  /// Delta'(h) = Delta(h) - 1 (x) h - h (x) 1 on H'.
  const HopfTensor& reduced_coproduct(const HopfMonomial& m) const {
    check_degree(m);
    if (m.is_unit()) throw Error("reduced coproduct is defined on H' only; got 1_H");
    return reduced_.at(m);
  }

  HopfTensor reduced_coproduct(const HopfElement& x) const {
    HopfTensor out;
    for (const auto& [m, c] : x) out += reduced_coproduct(m) * c;
    return out;
  }

  /// Delta'^[n](x) as words of length n, unfolded as
  /// (Delta'^[k] (x) Delta'^[n-k]) o Delta' with the given split k (1 <= k < n).
  HopfWordElement iterated_reduced_coproduct(const HopfElement& x, int n, int split = 1) const {
    if (n < 1) throw Error("iterated reduced coproduct needs n >= 1");
    HopfWordElement out;
    for (const auto& [m, c] : x) {
      check_degree(m);
      if (m.is_unit()) throw Error("iterated reduced coproduct is defined on H' only; got 1_H");
      out += iterated_reduced_monomial(m, n, split) * c;
    }
    return out;
  }

  /// Full iterated coproduct Delta^[n] = (Id (x) Delta^[n-1]) o Delta, as length-n words
  /// whose letters may be 1_H.
  HopfWordElement iterated_coproduct(const HopfElement& x, int n) const {
    if (n < 1) throw Error("iterated coproduct needs n >= 1");
    HopfWordElement out;
    for (const auto& [m, c] : x) {
      check_degree(m);
      out += iterated_full_monomial(m, n) * c;
    }
    return out;
  }

  /// (Delta (x) Id) o Delta == (Id (x) Delta) o Delta on every monomial up to max_degree.
  bool check_coassociativity(int max_degree) const {
    for (const auto& m : all_monomials_) {
      if (degree(m) > max_degree) continue;
      HopfWordElement left, right;
      for (const auto& [pair, c] : coproducts_.at(m)) {
        for (const auto& [inner, ci] : coproducts_.at(pair.first))
          left.add({inner.first, inner.second, pair.second}, c * ci);
        for (const auto& [inner, ci] : coproducts_.at(pair.second))
          right.add({pair.first, inner.first, inner.second}, c * ci);
      }
      if (!(left == right)) return false;
    }
    return true;
  }

  std::string render(const HopfMonomial& m) const {
    if (m.is_unit()) return "1";
    std::string out;
    const auto& g = m.generators();
    for (std::size_t i = 0; i < g.size();) {
      std::size_t j = i;
      while (j < g.size() && g[j] == g[i]) ++j;
      if (!out.empty()) out += '*';
      out += generators_.at(g[i]).name;
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  std::string render(const HopfElement& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x) {
      Rational a = c;
      if (!first) {
        out += c < 0 ? " - " : " + ";
        if (c < 0) a = -c;
      }
      first = false;
      if (m.is_unit()) {
        out += to_string(a);
        continue;
      }
      if (a == -1) out += "-";
      else if (a != 1) out += to_string(a) + "*";
      out += render(m);
    }
    return out;
  }

  std::string render(const HopfWord& w) const {
    return render_word(w, [this](const HopfMonomial& m) { return render(m); });
  }

  /// Parses `l1^2*l2`, `l1*l1*l2` or `1`.
  HopfMonomial parse_monomial(std::string_view text) const {
    std::vector<std::size_t> gens;
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (text.substr(pos) == "1") return HopfMonomial{};
    while (true) {
      skip();
      const std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      if (start == pos) throw ParseError("expected a generator name in '" + std::string(text) + "'", pos);
      std::string name(text.substr(start, pos - start));
      std::size_t index = 0;
      try {
        index = generator_index(name);
      } catch (const Error&) {
        throw ParseError("unknown generator '" + name + "' for '" + name_ + "'", start);
      }
      int times = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        const std::size_t d0 = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (d0 == pos) throw ParseError("expected exponent in '" + std::string(text) + "'", pos);
        times = std::stoi(std::string(text.substr(d0, pos - d0)));
      }
      gens.insert(gens.end(), static_cast<std::size_t>(times), index);
      skip();
      if (pos == text.size()) break;
      if (text[pos] != '*') throw ParseError("expected '*' in '" + std::string(text) + "'", pos);
      ++pos;
    }
    HopfMonomial m(std::move(gens));
    if (degree(m) > truncation_)
      throw TruncationError("monomial '" + std::string(text) + "' exceeds truncation degree " +
                            std::to_string(truncation_));
    return m;
  }

  void check_degree(const HopfMonomial& m) const {
    if (degree(m) > truncation_)
      throw TruncationError("monomial " + render(m) + " of degree " + std::to_string(degree(m)) +
                            " exceeds truncation degree " + std::to_string(truncation_) + " of '" +
                            name_ + "'");
  }

 private:
  void validate() const {
    if (truncation_ < 1) throw Error("truncation degree must be >= 1");
    if (reduced_table_.size() != generators_.size())
      throw Error("coproduct table size does not match the generator list");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (g.degree < 1) throw Error("generator '" + g.name + "' must have positive degree");
      for (const auto& t : reduced_table_[i]) {
        const int dl = degree(t.left);
        const int dr = degree(t.right);
        if (dl < 1 || dr < 1 || dl + dr != g.degree)
          throw Error("reduced coproduct of '" + g.name + "' violates the filtration");
      }
    }
  }

  void enumerate_monomials() {
    // multisets of generator indices with total degree <= N, built in index order
    std::vector<HopfMonomial> found;
    std::function<void(std::vector<std::size_t>&, std::size_t, int)> rec =
        [&](std::vector<std::size_t>& current, std::size_t min_index, int deg) {
          found.emplace_back(current);
          for (std::size_t g = min_index; g < generators_.size(); ++g) {
            const int d = deg + generators_[g].degree;
            if (d > truncation_) continue;
            current.push_back(g);
            rec(current, g, d);
            current.pop_back();
          }
        };
    std::vector<std::size_t> current;
    rec(current, 0, 0);
    std::stable_sort(found.begin(), found.end(), [this](const HopfMonomial& a, const HopfMonomial& b) {
      const int da = degree(a), db = degree(b);
      return da != db ? da < db : a < b;
    });
    all_monomials_ = found;
    for (const auto& m : found)
      if (!m.is_unit()) monomials_.push_back(m);
  }

  void build_coproducts() {
    const HopfMonomial one;
    for (const auto& m : all_monomials_) {
      HopfTensor delta;
      delta.add({one, one}, 1);
      for (std::size_t g : m.generators()) {
        HopfTensor dg;
        const HopfMonomial gm = HopfMonomial::generator(g);
        dg.add({one, gm}, 1);
        dg.add({gm, one}, 1);
        for (const auto& t : reduced_table_[g]) dg.add({t.left, t.right}, t.coefficient);
        delta = tensor_product(delta, dg);
      }
      if (!m.is_unit()) {
        HopfTensor red = delta;
        red.add({one, m}, -1);
        red.add({m, one}, -1);
        reduced_.emplace(m, std::move(red));
      }
      coproducts_.emplace(m, std::move(delta));
    }
  }

  HopfWordElement iterated_reduced_monomial(const HopfMonomial& m, int n, int split) const {
    if (n == 1) return word_element(HopfWord{m});
    const int k = std::clamp(split, 1, n - 1);
    HopfWordElement out;
    for (const auto& [pair, c] : reduced_.at(m)) {
      const HopfWordElement left = iterated_reduced_monomial(pair.first, k, 1);
      if (left.is_zero()) continue;
      const HopfWordElement right = iterated_reduced_monomial(pair.second, n - k, 1);
      out += concat(left, right) * c;
    }
    return out;
  }

  HopfWordElement iterated_full_monomial(const HopfMonomial& m, int n) const {
    if (n == 1) return word_element(HopfWord{m});
    HopfWordElement out;
    for (const auto& [pair, c] : coproducts_.at(m))
      out += concat(word_element(HopfWord{pair.first}), iterated_full_monomial(pair.second, n - 1)) * c;
    return out;
  }

  std::string name_;
  std::vector<HopfGenerator> generators_;
  std::vector<std::vector<CoproductTerm>> reduced_table_;
  int truncation_;
  std::string convention_;
  std::vector<HopfMonomial> all_monomials_;
  std::vector<HopfMonomial> monomials_;
  std::map<HopfMonomial, HopfTensor> coproducts_;
  std::map<HopfMonomial, HopfTensor> reduced_;
};

using HopfSpecPtr = std::shared_ptr<const HopfAlgebraSpec>;

inline HopfElement hopf_product(const HopfElement& x, const HopfElement& y) {
  HopfElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(a * b, ca * cb);
  return out;
}

/// Ladder (divided-power) Hopf algebra: generators l1..lN, deg l_n = n,
/// Delta(l_n) = sum_{k=0}^n l_k (x) l_{n-k} with l_0 = 1.
inline HopfSpecPtr ladder_spec(int truncation) {
  if (truncation < 1) throw Error("ladder truncation degree must be >= 1");
  std::vector<HopfGenerator> gens;
  std::vector<std::vector<CoproductTerm>> table;
  for (int n = 1; n <= truncation; ++n) {
    gens.push_back({"l" + std::to_string(n), n});
    std::vector<CoproductTerm> terms;
    for (int k = 1; k < n; ++k)
      terms.push_back({HopfMonomial::generator(static_cast<std::size_t>(k - 1)),
                       HopfMonomial::generator(static_cast<std::size_t>(n - k - 1)), 1});
    table.push_back(std::move(terms));
  }
  return std::make_shared<const HopfAlgebraSpec>("ladder", std::move(gens), std::move(table), truncation);
}

/// Which factor of Delta(a_n) carries the coordinates of the outer series.
enum class FdbOrientation { OuterLeft, InnerLeft };

inline const char* to_string(FdbOrientation o) {
  return o == FdbOrientation::OuterLeft ? "outer-left" : "inner-left";
}

namespace detail {

inline std::size_t symbol_index(const std::string& s) { return std::stoul(s.substr(1)); }

}  // namespace detail

/// Faa di Bruno Hopf algebra: generators a1..aN, deg a_n = n, where a_n reads the
/// x^{n+1} coefficient of f(x) = x + sum a_m(f) x^{m+1}. The coproduct is derived
/// by composing two generic series f = x + sum u_m x^{m+1}, g = x + sum v_m x^{m+1}
/// and splitting each monomial of [x^{n+1}] f(g(x)) into its u- and v-parts.
/// With OuterLeft the u-part (outer series) is the left tensor factor, so that
/// (phi_f * phi_g)(a_n) = [x^{n+1}] (f o g).
inline HopfSpecPtr faa_di_bruno_spec(int truncation, FdbOrientation orientation = FdbOrientation::OuterLeft) {
  if (truncation < 1) throw Error("Faa di Bruno truncation degree must be >= 1");
  const int order = truncation + 1;
  const BasisKind kind = BasisKind::FreeCommutative;
  TruncatedSeries f = TruncatedSeries::identity(kind, order);
  TruncatedSeries g = TruncatedSeries::identity(kind, order);
  for (int m = 1; m <= truncation; ++m) {
    f[m + 1] = AlgebraElement::symbol("u" + std::to_string(m));
    g[m + 1] = AlgebraElement::symbol("v" + std::to_string(m));
  }
  const TruncatedSeries fg = compose_series(f, g);

  std::vector<HopfGenerator> gens;
  std::vector<std::vector<CoproductTerm>> table;
  for (int n = 1; n <= truncation; ++n) {
    gens.push_back({"a" + std::to_string(n), n});
    std::vector<CoproductTerm> terms;
    for (const auto& [mono, c] : fg[n + 1].terms()) {
      std::vector<std::size_t> outer, inner;
      for (const auto& s : mono.symbol_list())
        (s[0] == 'u' ? outer : inner).push_back(detail::symbol_index(s) - 1);
      if (outer.empty() || inner.empty()) continue;  // the a_n (x) 1 and 1 (x) a_n terms
      HopfMonomial left(outer), right(inner);
      if (orientation == FdbOrientation::InnerLeft) std::swap(left, right);
      terms.push_back({left, right, c});
    }
    table.push_back(std::move(terms));
  }
  std::string convention =
      orientation == FdbOrientation::OuterLeft
          ? "a_n(f) = [x^{n+1}] f; left tensor factor of Delta(a_n) reads the outer series; "
            "phi_f * phi_g = phi_{f o g}, so phi_- * phi = phi_+ <=> f_- o f = f_+"
          : "a_n(f) = [x^{n+1}] f; left tensor factor of Delta(a_n) reads the inner series; "
            "phi_f * phi_g = phi_{g o f}";
  return std::make_shared<const HopfAlgebraSpec>("faadibruno", std::move(gens), std::move(table), truncation,
                                                 std::move(convention));
}

/// Instance lookup by CLI name ("ladder", "faadibruno").
inline HopfSpecPtr make_hopf_spec(std::string_view name, int truncation) {
  if (name == "ladder") return ladder_spec(truncation);
  if (name == "faadibruno" || name == "faa-di-bruno" || name == "fdb") return faa_di_bruno_spec(truncation);
  throw Error("unknown Hopf algebra instance '" + std::string(name) + "' (expected ladder or faadibruno)");
}

}  // namespace brb
