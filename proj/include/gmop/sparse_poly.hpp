#pragma once

// Sparse commutative multivariate polynomials.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gmop/laurent.hpp"

namespace gmop {

template <Coefficient C>
class SparsePoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, C>;

  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const C& c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static SparsePoly variable(int nvars, int index) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(C(1), e);
  }
  static SparsePoly monomial(const C& c, Exponent e) {
    SparsePoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
  }
  /// Coefficient of var^k, as a polynomial in the same variables (var exponent 0).
  SparsePoly coefficient_of(int var, int k) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<std::size_t>(var)] != k) continue;
      Exponent f = e;
      f[static_cast<std::size_t>(var)] = 0;
      r.add_term(f, c);
    }
    return r;
  }

  void add_term(const Exponent& e, const C& c) {
    if (CoeffTraits<C>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r(std::max(a.nvars_, b.nvars_));
    Exponent e(static_cast<std::size_t>(r.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  SparsePoly scaled(const C& s) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  SparsePoly pow(int k) const {
    SparsePoly r = constant(nvars_, C(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Substitutes values[i] (polynomials in another ring) for variable i,
  /// by nested Horner schemes so that every multiplication has one factor
  /// among the substituted values.
  template <class P>
  P substitute(const std::vector<P>& values, const P& one) const {
    if (terms_.empty()) return one.scaled(C(0));
    std::vector<std::pair<Exponent, C>> ts(terms_.begin(), terms_.end());
    return horner(ts.begin(), ts.end(), 0, values, one);
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string cs = CoeffTraits<C>::str(it->second);
      bool single = cs.find(' ') == std::string::npos;
      bool neg = single && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        int k = it->first[i];
        if (k == 0) continue;
        if (!mono.empty()) mono += "·";
        mono += names[i] + (k > 1 ? "^" + std::to_string(k) : "");
      }
      if (mono.empty()) {
        os << (single ? cs : "(" + cs + ")");
      } else {
        if (cs != "1") os << (single ? cs : "(" + cs + ")") << "·";
        os << mono;
      }
    }
    return os.str();
  }

 private:
  void adopt(const SparsePoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
  }

  using It = typename std::vector<std::pair<Exponent, C>>::iterator;

  // Terms in [lo, hi) agree on the exponents of variables < var and are
  // sorted lexicographically, so they group by the exponent of var.
  template <class P>
  static P horner(It lo, It hi, std::size_t var, const std::vector<P>& values, const P& one) {
    if (var == values.size()) return one.scaled(lo->second);
    std::vector<std::pair<int, P>> groups;
    for (It it = lo; it != hi;) {
      int k = it->first[var];
      It jt = it;
      while (jt != hi && jt->first[var] == k) ++jt;
      groups.emplace_back(k, horner(it, jt, var + 1, values, one));
      it = jt;
    }
    P acc = groups.back().second;
    int cur = groups.back().first;
    for (auto g = groups.rbegin() + 1; g != groups.rend(); ++g) {
      for (; cur > g->first; --cur) acc = acc * values[var];
      acc += g->second;
    }
    for (; cur > 0; --cur) acc = acc * values[var];
    return acc;
  }

  int nvars_ = 0;
  Terms terms_;
};

using LSparse = SparsePoly<LaurentLambda>;

}  // namespace gmop
