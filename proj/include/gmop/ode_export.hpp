#pragma once

// From A to differential operators in one variable s: a acts as
// multiplication by s and b^{-1} as D = d/ds (from a.b - b.a = b^2 one gets
// b^{-1}.a - a.b^{-1} = 1). A homogeneous element p of degree q becomes
// b^{-q}.p = E(theta) with theta = s.D, using b^{-i}.a^i = (theta+1)...(theta+i).

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "gmop/gm_engine.hpp"

namespace gmop {

/// Euler polynomial E with b^{-q}.p = E(theta) for p homogeneous of degree q.
template <Coefficient C>
UniPoly<C> euler_form(const BasicElement<C>& p) {
  if (!p.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "Euler form needs a homogeneous element");
  using P = UniPoly<C>;
  std::vector<P> rising{P::constant(C(1))};  // rising[i] = (theta+1)...(theta+i)
  P out;
  for (const auto& [m, c] : p.terms()) {
    while (static_cast<int>(rising.size()) <= m.a) {
      C k(static_cast<int>(rising.size()));
      rising.push_back(rising.back() * P{k, C(1)});
    }
    out += rising[static_cast<std::size_t>(m.a)].scaled(c);
  }
  return out;
}

/// B with (-b)^d . B(-b^{-1}.a) = q, for q homogeneous of degree d and monic in a.
template <Coefficient C>
UniPoly<C> bernstein_polynomial(const BasicElement<C>& q) {
  if (!q.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "Bernstein polynomial needs a homogeneous element");
  if (!q.is_monic_in_a()) throw Error(ErrorKind::NotMonic, "Bernstein polynomial needs an element monic in a");
  UniPoly<C> e = euler_form(q);
  // B(x) = (-1)^d E(-x-1)
  UniPoly<C> b = e.compose_affine(C(-1), C(-1));
  return q.ab_degree() % 2 ? -b : b;
}

/// Differential operator sum_k p_k(s).D^k with D = d/ds.
class DiffOp {
 public:
  using Coeffs = std::map<int, LPoly>;

  DiffOp() = default;
  explicit DiffOp(Coeffs c) : c_(std::move(c)) { prune(); }

  /// s^i . D^j with coefficient c
  static DiffOp term(const LaurentLambda& c, int s_pow, int d_pow) {
    return DiffOp(Coeffs{{d_pow, LPoly::monomial(c, s_pow)}});
  }
  static DiffOp theta() { return term(LaurentLambda(1), 1, 1); }

  const Coeffs& coeffs() const { return c_; }
  int order() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  LPoly coefficient(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? LPoly{} : it->second;
  }
  LPoly leading() const { return c_.empty() ? LPoly{} : c_.rbegin()->second; }

  DiffOp& operator+=(const DiffOp& o) {
    for (const auto& [k, p] : o.c_) c_[k] += p;
    prune();
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    for (const auto& [k, p] : o.c_) c_[k] -= p;
    prune();
    return *this;
  }
  friend DiffOp operator+(DiffOp x, const DiffOp& y) { return x += y; }
  friend DiffOp operator-(DiffOp x, const DiffOp& y) { return x -= y; }
  DiffOp scaled(const LaurentLambda& s) const {
    DiffOp r = *this;
    for (auto& [k, p] : r.c_) p = p.scaled(s);
    r.prune();
    return r;
  }

  /// Composition in the Weyl algebra:
  /// (s^i D^j)(s^k D^l) = sum_m C(j,m) k(k-1)...(k-m+1) s^{i+k-m} D^{j-m+l}.
  friend DiffOp operator*(const DiffOp& x, const DiffOp& y) {
    Coeffs out;
    for (const auto& [j, px] : x.c_)
      for (int i = 0; i <= px.degree(); ++i) {
        if (px[i].is_zero()) continue;
        for (const auto& [l, py] : y.c_)
          for (int k = 0; k <= py.degree(); ++k) {
            if (py[k].is_zero()) continue;
            LaurentLambda base = px[i] * py[k];
            for (int m = 0; m <= std::min(j, k); ++m) {
              Rational w(BigInt(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(m)) * falling(k, m)));
              out[j - m + l] += LPoly::monomial(base * w, i + k - m);
            }
          }
      }
    return DiffOp(std::move(out));
  }

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  /// "(s^6 + (1/432)·λ^6·s^5)·D^6 + ...", highest order first.
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      std::string ps = it->second.str("s");
      bool wrap = ps.find(' ') != std::string::npos && it->first > 0;
      os << (wrap ? "(" + ps + ")" : ps);
      if (it->first > 0) os << "·D" << (it->first > 1 ? "^" + std::to_string(it->first) : "");
    }
    return os.str();
  }

 private:
  void prune() {
    for (auto it = c_.begin(); it != c_.end();)
      it = it->second.is_zero() ? c_.erase(it) : std::next(it);
  }

  Coeffs c_;
};

/// E(theta) as a differential operator.
template <Coefficient C>
DiffOp euler_operator(const UniPoly<C>& e) {
  DiffOp out;
  DiffOp power = DiffOp::term(LaurentLambda(1), 0, 0);
  const DiffOp th = DiffOp::theta();
  for (int k = 0; k <= e.degree(); ++k) {
    if (!CoeffTraits<C>::is_zero(e[k])) {
      LaurentLambda ck;
      if constexpr (std::is_same_v<C, Rational>) ck = LaurentLambda(e[k]);
      else ck = e[k];
      out += power.scaled(ck);
    }
    power = power * th;
  }
  return out;
}

/// b^{-(d+h)}.P = E_{d+h}(theta) - c.lambda^r.D^h.E_d(theta).
inline DiffOp to_differential_operator(const GMOperator& g) {
  DiffOp top = euler_operator(euler_form(g.P_dh));
  DiffOp low = DiffOp::term(LaurentLambda(1), 0, static_cast<int>(g.h)) * euler_operator(euler_form(g.P_d));
  return top - low.scaled(g.c_lambda_r());
}

/// Singular points outside the origin solve s^h = c.lambda^r.
struct SingularValues {
  long h = 0;
  LaurentLambda rhs;
  friend bool operator==(const SingularValues&, const SingularValues&) = default;
};

inline SingularValues singular_values(const GMOperator& g) { return {g.h, g.c_lambda_r()}; }

}  // namespace gmop
