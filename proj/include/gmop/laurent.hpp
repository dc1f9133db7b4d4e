#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gmop/rational.hpp"

namespace gmop {

/// Laurent polynomial in the symbolic parameter lambda with rational
/// coefficients. Zero coefficients are never stored.
class LaurentLambda {
 public:
  using Terms = std::map<int, Rational>;

  LaurentLambda() = default;
  LaurentLambda(const Rational& c) { if (!c.is_zero()) terms_[0] = c; }  // NOLINT(implicit)
  LaurentLambda(int c) : LaurentLambda(Rational(c)) {}                    // NOLINT(implicit)

  static LaurentLambda monomial(const Rational& c, int exponent) {
    LaurentLambda r;
    if (!c.is_zero()) r.terms_[exponent] = c;
    return r;
  }
  static LaurentLambda lambda_pow(int exponent) { return monomial(Rational(1), exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
  /// True when no power of lambda other than lambda^0 occurs.
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_value() const { return coefficient(0); }

  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  /// Substitutes a nonzero rational value for lambda.
  Rational evaluate(const Rational& lambda) const {
    Rational s;
    for (const auto& [e, c] : terms_) s += c * lambda.pow(e);
    return s;
  }

  LaurentLambda operator-() const {
    LaurentLambda r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  LaurentLambda& operator+=(const LaurentLambda& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentLambda& operator-=(const LaurentLambda& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentLambda& operator*=(const LaurentLambda& o) { return *this = *this * o; }
  LaurentLambda& operator*=(const Rational& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentLambda operator+(LaurentLambda a, const LaurentLambda& b) { return a += b; }
  friend LaurentLambda operator-(LaurentLambda a, const LaurentLambda& b) { return a -= b; }
  friend LaurentLambda operator*(const LaurentLambda& a, const LaurentLambda& b) {
    LaurentLambda r;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  friend LaurentLambda operator*(LaurentLambda a, const Rational& s) { return a *= s; }
  friend LaurentLambda operator*(const Rational& s, LaurentLambda a) { return a *= s; }
  friend bool operator==(const LaurentLambda& a, const LaurentLambda& b) { return a.terms_ == b.terms_; }

  /// Inverse exists only for single-term elements.
  std::optional<LaurentLambda> try_inverse() const {
    if (!is_monomial()) return std::nullopt;
    return monomial(terms_.begin()->second.inverse(), -terms_.begin()->first);
  }

  /// Renders e.g. "(1/432)·λ^6 - 2". Terms are listed by decreasing exponent.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      int e = it->first;
      if (!first) {
        os << (c.sign() < 0 ? " - " : " + ");
        c = c.abs();
      } else if (c.sign() < 0 && e != 0) {
        os << "-";
        c = c.abs();
      }
      first = false;
      if (e == 0) {
        os << c;
        continue;
      }
      if (!c.is_one()) os << (c.is_integer() ? c.str() : "(" + c.str() + ")") << "·";
      os << "λ";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentLambda& l) { return os << l.str(); }

 private:
  void add_term(int e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Scalar hooks shared by the generic containers (UniPoly, ab-algebra
/// elements) so they can run over Rational or LaurentLambda coefficients.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static bool is_one(const Rational& c) { return c.is_one(); }
  static std::optional<Rational> try_inverse(const Rational& c) {
    if (c.is_zero()) return std::nullopt;
    return c.inverse();
  }
  static bool is_lambda_free(const Rational&) { return true; }
  static Rational to_rational(const Rational& c) { return c; }
  static std::string str(const Rational& c) { return c.str(); }
};

template <>
struct CoeffTraits<LaurentLambda> {
  static bool is_zero(const LaurentLambda& c) { return c.is_zero(); }
  static bool is_one(const LaurentLambda& c) { return c.is_one(); }
  static std::optional<LaurentLambda> try_inverse(const LaurentLambda& c) { return c.try_inverse(); }
  static bool is_lambda_free(const LaurentLambda& c) { return c.is_constant(); }
  static Rational to_rational(const LaurentLambda& c) { return c.constant_value(); }
  static std::string str(const LaurentLambda& c) { return c.str(); }
};

template <class C>
concept Coefficient = requires(const C& a, const C& b, const Rational& s) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a * s } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { CoeffTraits<C>::is_zero(a) } -> std::convertible_to<bool>;
};

}  // namespace gmop
