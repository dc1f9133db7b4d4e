#pragma once

// Elements of the algebra A = Q<a,b> with a.b - b.a = b^2 and of its b-adic
// truncations A / b^N A.
//
// Normal form: sum of c_{k,i} b^k a^i with the b-powers on the left. In this
// form b-adic truncation drops whole terms, the reduction mod b is the
// k = 0 slice, and the (a,b)-grading is read off as i + k. Since
// a.b^k = b^k.a + k.b^(k+1), multiplying never lowers b-exponents, so b^N A
// is a two-sided ideal and truncated arithmetic is well defined.

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gmop/unipoly.hpp"

namespace gmop {

/// Exponent pair of the normal-form monomial b^b . a^a.
struct BAMonomial {
  int b = 0;
  int a = 0;
  int degree() const { return a + b; }
  friend auto operator<=>(const BAMonomial&, const BAMonomial&) = default;
};

template <Coefficient C>
class BasicElement {
 public:
  using Terms = std::map<BAMonomial, C>;

  BasicElement() = default;
  explicit BasicElement(const C& scalar) { add_term({0, 0}, scalar); }

  static BasicElement one() { return BasicElement(C(1)); }
  static BasicElement gen_a() { return term(C(1), 0, 1); }
  static BasicElement gen_b() { return term(C(1), 1, 0); }
  /// c . b^bpow . a^apow
  static BasicElement term(const C& c, int bpow, int apow) {
    BasicElement r;
    r.add_term({bpow, apow}, c);
    return r;
  }
  /// eta.a + theta.b
  static BasicElement linear(const C& eta, const C& theta) {
    BasicElement r;
    r.add_term({0, 1}, eta);
    r.add_term({1, 0}, theta);
    return r;
  }
  /// Embeds a polynomial in a (coefficients constant in b).
  static BasicElement from_a_poly(const UniPoly<C>& p) {
    BasicElement r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term({0, i}, p[i]);
    return r;
  }

  const Terms& terms() const { return terms_; }
  std::optional<int> trunc() const { return trunc_; }
  bool is_truncated() const { return trunc_.has_value(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(int bpow, int apow) const {
    auto it = terms_.find({bpow, apow});
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Largest a-exponent; -1 for zero.
  int a_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.a);
    return d;
  }
  /// Smallest b-exponent; -1 for zero.
  int b_order() const { return terms_.empty() ? -1 : terms_.begin()->first.b; }
  /// Smallest total degree i + k; -1 for zero.
  int ab_valuation() const {
    if (terms_.empty()) return -1;
    int v = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_) v = std::min(v, m.degree());
    return v;
  }
  /// Largest total degree i + k; -1 for zero.
  int ab_degree() const {
    int v = -1;
    for (const auto& [m, c] : terms_) v = std::max(v, m.degree());
    return v;
  }

  bool is_homogeneous() const { return !terms_.empty() && ab_valuation() == ab_degree(); }

  BasicElement homogeneous_part(int degree) const {
    BasicElement r;
    r.trunc_ = trunc_;
    for (const auto& [m, c] : terms_)
      if (m.degree() == degree) r.terms_.emplace(m, c);
    return r;
  }

  /// Coefficient series of a^i, as the list of (b-power, coefficient).
  std::vector<std::pair<int, C>> a_coefficient(int i) const {
    std::vector<std::pair<int, C>> out;
    for (const auto& [m, c] : terms_)
      if (m.a == i) out.emplace_back(m.b, c);
    return out;
  }

  /// Monic in a: the top a-power has coefficient exactly 1 (no b-tail).
  bool is_monic_in_a() const {
    int d = a_degree();
    if (d < 0) return false;
    auto lead = a_coefficient(d);
    return lead.size() == 1 && lead[0].first == 0 && CoeffTraits<C>::is_one(lead[0].second);
  }

  /// The class modulo b, as a polynomial in a.
  UniPoly<C> mod_b() const {
    std::vector<C> v;
    for (const auto& [m, c] : terms_) {
      if (m.b != 0) break;
      if (static_cast<int>(v.size()) <= m.a) v.resize(static_cast<std::size_t>(m.a) + 1, C(0));
      v[static_cast<std::size_t>(m.a)] = c;
    }
    return UniPoly<C>(std::move(v));
  }

  /// Copy truncated at b^n (keeps the smaller order if already truncated).
  BasicElement truncated(int n) const {
    BasicElement r;
    r.trunc_ = trunc_ ? std::min(*trunc_, n) : n;
    for (const auto& [m, c] : terms_)
      if (m.b < *r.trunc_) r.terms_.emplace(m, c);
    return r;
  }
  /// Forgets the truncation marker (keeps the stored terms).
  BasicElement as_exact() const {
    BasicElement r = *this;
    r.trunc_.reset();
    return r;
  }

  /// b^k . x (left multiplication by a power of b, k may be negative when every
  /// term has enough b-factors).
  BasicElement b_shift(int k) const {
    BasicElement r;
    if (trunc_) r.trunc_ = *trunc_ + k;
    for (const auto& [m, c] : terms_) {
      if (m.b + k < 0) throw std::domain_error("b_shift: element not divisible by b^" + std::to_string(-k));
      r.terms_.emplace(BAMonomial{m.b + k, m.a}, c);
    }
    return r;
  }

  /// a . x, using a.b^k = b^k.a + k.b^(k+1).
  BasicElement left_mul_a() const {
    BasicElement r;
    r.trunc_ = trunc_;
    for (const auto& [m, c] : terms_) {
      r.add_term({m.b, m.a + 1}, c);
      if (m.b != 0) r.add_term({m.b + 1, m.a}, c * Rational(m.b));
    }
    r.drop_beyond_trunc();
    return r;
  }

  BasicElement operator-() const {
    BasicElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  BasicElement& operator+=(const BasicElement& o) {
    merge_trunc(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    drop_beyond_trunc();
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    merge_trunc(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    drop_beyond_trunc();
    return *this;
  }
  friend BasicElement operator+(BasicElement x, const BasicElement& y) { return x += y; }
  friend BasicElement operator-(BasicElement x, const BasicElement& y) { return x -= y; }

  BasicElement scaled(const C& s) const {
    BasicElement r;
    r.trunc_ = trunc_;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }
  friend BasicElement operator*(const C& s, const BasicElement& x) { return x.scaled(s); }

  friend BasicElement operator*(const BasicElement& x, const BasicElement& y) { return multiply(x, y); }
  BasicElement& operator*=(const BasicElement& o) { return *this = multiply(*this, o); }

  /// Equality of stored terms and truncation order.
  friend bool operator==(const BasicElement& x, const BasicElement& y) {
    return x.trunc_ == y.trunc_ && x.terms_ == y.terms_;
  }

  /// Equality modulo b^n, ignoring truncation markers (both must be known up to n).
  bool equals_mod_b(const BasicElement& o, int n) const {
    return truncated(n).terms_ == o.truncated(n).terms_;
  }

  BasicElement pow(int e) const {
    BasicElement r = one();
    r.trunc_ = trunc_;
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    BasicElement<D> r;
    if (trunc_) r = r.truncated(*trunc_);
    for (const auto& [m, c] : terms_) r += BasicElement<D>::term(f(c), m.b, m.a);
    return r;
  }

  /// Text form, terms by decreasing total degree then decreasing a-power,
  /// e.g. "a^2 - 3·b·a + b^2".
  std::string str() const {
    if (terms_.empty()) return trunc_ ? "O(b^" + std::to_string(*trunc_) + ")" : "0";
    std::vector<std::pair<BAMonomial, C>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
      if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
      return x.first.a > y.first.a;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
      std::string cs = CoeffTraits<C>::str(c);
      bool single = cs.find(' ') == std::string::npos;
      bool neg = single && !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      std::string mono;
      if (m.b > 0) mono += m.b == 1 ? "b" : "b^" + std::to_string(m.b);
      if (m.a > 0) {
        if (!mono.empty()) mono += "·";
        mono += m.a == 1 ? "a" : "a^" + std::to_string(m.a);
      }
      if (mono.empty()) {
        os << (single ? cs : "(" + cs + ")");
      } else {
        bool bare = single && (cs.find('/') == std::string::npos || cs.find("·") != std::string::npos);
        if (cs != "1") os << (bare ? cs : "(" + cs + ")") << "·";
        os << mono;
      }
    }
    if (trunc_) os << " + O(b^" << *trunc_ << ")";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicElement& x) { return os << x.str(); }

 private:
  template <Coefficient D>
  friend class BasicElement;

  void add_term(const BAMonomial& m, const C& c) {
    if (CoeffTraits<C>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  void merge_trunc(const BasicElement& o) {
    if (o.trunc_) trunc_ = trunc_ ? std::min(*trunc_, *o.trunc_) : *o.trunc_;
  }

  void drop_beyond_trunc() {
    if (!trunc_) return;
    terms_.erase(terms_.lower_bound({*trunc_, 0}), terms_.end());
  }

  static BasicElement multiply(const BasicElement& x, const BasicElement& y) {
    BasicElement r;
    r.merge_trunc(x);
    r.merge_trunc(y);
    if (x.is_zero() || y.is_zero()) return r;
    // a^i . y for each a-power i occurring in x, built incrementally.
    int top = x.a_degree();
    std::vector<BasicElement> apow;
    apow.reserve(static_cast<std::size_t>(top) + 1);
    BasicElement cur = y;
    if (r.trunc_) cur = cur.truncated(*r.trunc_);
    apow.push_back(cur);
    for (int i = 1; i <= top; ++i) apow.push_back(apow.back().left_mul_a());
    for (const auto& [m, c] : x.terms_) {
      if (r.trunc_ && m.b >= *r.trunc_) break;
      for (const auto& [my, cy] : apow[static_cast<std::size_t>(m.a)].terms_) {
        int bb = m.b + my.b;
        if (r.trunc_ && bb >= *r.trunc_) continue;
        r.add_term({bb, my.a}, c * cy);
      }
    }
    return r;
  }

  Terms terms_;
  std::optional<int> trunc_;
};

using ABElement = BasicElement<LaurentLambda>;
using ABRational = BasicElement<Rational>;

/// Substitutes a rational value for lambda.
inline ABRational specialize(const ABElement& x, const Rational& lambda) {
  return x.map_coefficients([&](const LaurentLambda& c) { return c.evaluate(lambda); });
}

/// Reads an element whose coefficients are free of lambda as a rational element.
inline ABRational to_rational_element(const ABElement& x) {
  for (const auto& [m, c] : x.terms())
    if (!c.is_constant())
      throw Error(ErrorKind::LambdaNotSpecialized, "coefficient " + c.str() + " still depends on lambda");
  return x.map_coefficients([](const LaurentLambda& c) { return c.constant_value(); });
}

inline ABElement to_laurent_element(const ABRational& x) {
  return x.map_coefficients([](const Rational& c) { return LaurentLambda(c); });
}

/// Inverse of a power series in b with invertible constant term, modulo b^n.
template <Coefficient C>
std::vector<C> invert_b_series(const std::vector<C>& series, int n) {
  auto inv0 = CoeffTraits<C>::try_inverse(series.empty() ? C(0) : series[0]);
  if (!inv0) throw Error(ErrorKind::NonMonicDivisor, "leading a-coefficient is not a unit");
  std::vector<C> out(static_cast<std::size_t>(n), C(0));
  out[0] = *inv0;
  for (int k = 1; k < n; ++k) {
    C acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(series.size()); ++j)
      acc = acc + series[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = -(acc * *inv0);
  }
  return out;
}

template <Coefficient C>
struct DivisionResult {
  BasicElement<C> quotient;
  BasicElement<C> remainder;
};

/// Right division p = quotient . divisor + remainder with
/// a_degree(remainder) < a_degree(divisor). The divisor's leading
/// a-coefficient must be a unit: an invertible scalar, or (for truncated
/// operands) a b-series with invertible constant term.
template <Coefficient C>
DivisionResult<C> right_divide(const BasicElement<C>& p, const BasicElement<C>& divisor) {
  using E = BasicElement<C>;
  if (divisor.is_zero()) throw Error(ErrorKind::NonMonicDivisor, "division by zero");
  const int m = divisor.a_degree();
  auto lead = divisor.a_coefficient(m);

  // Normalize the divisor to be monic: divisor = unit . monic.
  E unit_inv;  // left factor u^{-1} with u^{-1}.divisor monic
  if (lead.size() == 1 && lead[0].first == 0) {
    auto inv = CoeffTraits<C>::try_inverse(lead[0].second);
    if (!inv) throw Error(ErrorKind::NonMonicDivisor, "leading a-coefficient is not invertible");
    unit_inv = E(*inv);
  } else {
    std::optional<int> n = p.trunc();
    if (divisor.trunc()) n = n ? std::min(*n, *divisor.trunc()) : *divisor.trunc();
    if (!n || lead.front().first != 0)
      throw Error(ErrorKind::NonMonicDivisor, "leading a-coefficient is a non-constant b-series");
    std::vector<C> series(static_cast<std::size_t>(*n), C(0));
    for (const auto& [k, c] : lead)
      if (k < *n) series[static_cast<std::size_t>(k)] = c;
    auto inv = invert_b_series(series, *n);
    unit_inv = E().truncated(*n);
    for (int k = 0; k < *n; ++k) unit_inv += E::term(inv[static_cast<std::size_t>(k)], k, 0);
  }
  const E monic = unit_inv * divisor;

  E quot;
  E rem = p;
  if (monic.trunc()) {
    quot = quot.truncated(*monic.trunc());
    rem = rem.truncated(*monic.trunc());
  }
  while (!rem.is_zero() && rem.a_degree() >= m) {
    const int top = rem.a_degree();
    E step;
    for (const auto& [k, c] : rem.a_coefficient(top)) step += E::term(c, k, top - m);
    quot += step;
    rem -= step * monic;
  }
  return {quot * unit_inv, rem};
}

/// Lowest-degree homogeneous component.
template <Coefficient C>
BasicElement<C> initial_form(const BasicElement<C>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroElement, "initial form of zero");
  int v = p.ab_valuation();
  if (p.trunc() && *p.trunc() <= v)
    throw Error(ErrorKind::TruncationTooSmall, "truncation order does not exceed the (a,b)-valuation");
  return p.homogeneous_part(v).as_exact();
}

/// The anti-automorphism with a -> a - k.b, b -> -b.
template <Coefficient C>
BasicElement<C> theta_k(const BasicElement<C>& p, int k) {
  using E = BasicElement<C>;
  E r;
  if (p.trunc()) r = r.truncated(*p.trunc());
  if (p.is_zero()) return r;
  const E ta = E::linear(C(1), C(-k));
  const E tb = E::term(C(-1), 1, 0);
  std::vector<E> ta_pow{E::one()};
  std::vector<E> tb_pow{E::one()};
  for (const auto& [m, c] : p.terms()) {
    while (static_cast<int>(ta_pow.size()) <= m.a) ta_pow.push_back(ta_pow.back() * ta);
    while (static_cast<int>(tb_pow.size()) <= m.b) tb_pow.push_back(tb_pow.back() * tb);
    // theta(b^k a^i) = theta(a)^i theta(b)^k
    r += (ta_pow[static_cast<std::size_t>(m.a)] * tb_pow[static_cast<std::size_t>(m.b)]).scaled(c);
  }
  return r;
}

/// Substitution a -> a + v for a scalar v (an automorphism of A, since
/// [a + v, b] = b^2).
template <Coefficient C>
BasicElement<C> shift_a(const BasicElement<C>& p, const C& v) {
  using E = BasicElement<C>;
  E r;
  if (p.trunc()) r = r.truncated(*p.trunc());
  for (const auto& [m, c] : p.terms()) {
    // b^k (a+v)^i, binomial expansion (a and v commute).
    for (int j = 0; j <= m.a; ++j) {
      C coeff = c * Rational(binomial(static_cast<unsigned long>(m.a), static_cast<unsigned long>(j)));
      for (int t = 0; t < m.a - j; ++t) coeff = coeff * v;
      r += E::term(coeff, m.b, j);
    }
  }
  return r;
}

/// Ordered product of degree-one factors (eta.a + theta.b), leftmost first.
struct HomogChain {
  std::vector<std::pair<Rational, Rational>> factors;

  std::size_t length() const { return factors.size(); }

  Rational leading_a_coefficient() const {
    Rational p(1);
    for (const auto& f : factors) p *= f.first;
    return p;
  }

  ABRational expand() const {
    ABRational e = ABRational::one();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      e = ABRational::linear(it->first, it->second) * e;
    return e;
  }

  friend bool operator==(const HomogChain&, const HomogChain&) = default;
};

inline ABRational chain_expand(const HomogChain& c) { return c.expand(); }

}  // namespace gmop
