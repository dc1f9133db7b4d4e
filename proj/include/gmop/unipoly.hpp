#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gmop/laurent.hpp"

namespace gmop {

/// Dense univariate polynomial, lowest degree first. The zero polynomial has
/// no coefficients; otherwise the last coefficient is nonzero.
template <Coefficient C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const C& v) { return UniPoly(std::vector<C>{v}); }
  static UniPoly x() { return UniPoly(std::vector<C>{C(0), C(1)}); }
  /// coeff * x^k
  static UniPoly monomial(const C& coeff, int k) {
    std::vector<C> v(static_cast<std::size_t>(k) + 1, C(0));
    v.back() = coeff;
    return UniPoly(std::move(v));
  }

  const std::vector<C>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const C& leading() const { return c_.back(); }
  C operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : C(0);
  }
  bool is_monic() const { return !c_.empty() && CoeffTraits<C>::is_one(c_.back()); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (CoeffTraits<C>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(UniPoly a, const Rational& s) {
    for (auto& v : a.c_) v = v * s;
    a.trim();
    return a;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly scaled(const C& s) const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }

  UniPoly pow(int e) const {
    UniPoly r = constant(C(1)), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> r(c_.size() - 1, C(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
  }

  C evaluate(const C& x) const {
    C acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(x + shift)
  UniPoly shifted(const C& shift) const {
    UniPoly r;
    UniPoly lin{shift, C(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
  }

  /// p(scale * x + shift)
  UniPoly compose_affine(const C& scale, const C& shift) const {
    UniPoly r;
    UniPoly lin{shift, scale};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
  }

  /// Renders with decreasing powers, e.g. "x^2 - 3·x + 2".
  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const C& v = c_[static_cast<std::size_t>(k)];
      if (CoeffTraits<C>::is_zero(v)) continue;
      std::string cs = CoeffTraits<C>::str(v);
      bool single = cs.find(' ') == std::string::npos;
      bool neg = !cs.empty() && cs[0] == '-' && single;
      if (neg) cs = cs.substr(1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      bool unit = cs == "1";
      if (k == 0) {
        os << cs;
        continue;
      }
      bool bare = single && (cs.find('/') == std::string::npos || cs.find("·") != std::string::npos);
      if (!unit) os << (bare ? cs : "(" + cs + ")") << "·";
      os << var;
      if (k != 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && CoeffTraits<C>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using QPoly = UniPoly<Rational>;
using LPoly = UniPoly<LaurentLambda>;

/// Euclidean division over the rationals: a = q*b + r, deg r < deg b.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {QPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  Rational inv = b.leading().inverse();
  for (int k = da; k >= db; --k) {
    Rational t = rem[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= t * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

inline QPoly make_monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading().inverse();
}

namespace detail {

// Primitive integer multiple of a nonzero rational polynomial.
inline std::vector<BigInt> primitive_part(const QPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<BigInt> z;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    z.push_back(c.num() * (l / c.den()));
    g = gcd(g, z.back());
  }
  for (auto& v : z) v /= g;
  return z;
}

inline void make_primitive(std::vector<BigInt>& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
  BigInt g = 0;
  for (const auto& v : z) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : z) v /= g;
}

}  // namespace detail

/// Monic gcd (zero if both inputs are zero). Runs a primitive remainder sequence
/// over the integers so coefficient growth stays bounded by the inputs.
inline QPoly gcd(const QPoly& p, const QPoly& q) {
  if (p.is_zero()) return make_monic(q);
  if (q.is_zero()) return make_monic(p);
  std::vector<BigInt> a = detail::primitive_part(p), b = detail::primitive_part(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // Pseudo-remainder of a by b.
    const BigInt& lb = b.back();
    while (a.size() >= b.size()) {
      BigInt la = a.back();
      std::size_t shift = a.size() - b.size();
      for (auto& v : a) v *= lb;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    detail::make_primitive(a);
    std::swap(a, b);
  }
  std::vector<Rational> c;
  for (const auto& v : a) c.emplace_back(v);
  return make_monic(QPoly(std::move(c)));
}

inline QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  assert(r.is_zero());
  return q;
}

}  // namespace gmop
