#pragma once

// Relation data and Gauss-Manin operator of
//   f = x^{alpha_1} + ... + x^{alpha_{n+1}} + lambda.x^{alpha_{n+2}}
// (n+2 monomials in n+1 variables, not quasi-homogeneous).
//
// Monomial indices are 0-based throughout: j = 0..n are the unit-coefficient
// monomials and j = n+1 is the lambda-monomial. Row 0 of the extended matrix
// Mt is the all-ones row, row i+1 holds the exponents of x_i.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gmop/ab_element.hpp"
#include "gmop/linalg.hpp"

namespace gmop {

struct PolySpec {
  std::string name;
  int nvars = 0;
  std::vector<std::vector<int>> monomials;  // n+1 exponent vectors of length nvars
  std::vector<int> lambda_monomial;         // length nvars
  std::vector<int> mu;                      // length nvars; empty means all zero

  std::size_t n_monomials() const { return monomials.size() + 1; }

  /// Exponent vector of monomial j (j = n+1 is the lambda-monomial).
  const std::vector<int>& column(std::size_t j) const {
    return j < monomials.size() ? monomials[j] : lambda_monomial;
  }

  int mu_exponent(std::size_t i) const { return mu.empty() ? 0 : mu[i]; }

  void validate() const {
    auto fail = [](const std::string& m) { throw Error(ErrorKind::MalformedSpec, m); };
    if (nvars < 1) fail("nvars must be positive");
    if (static_cast<int>(monomials.size()) != nvars)
      fail("expected " + std::to_string(nvars) + " unit monomials, got " + std::to_string(monomials.size()));
    std::set<std::vector<int>> seen;
    for (std::size_t j = 0; j < n_monomials(); ++j) {
      const auto& col = column(j);
      if (static_cast<int>(col.size()) != nvars) fail("monomial " + std::to_string(j) + " has wrong length");
      if (std::any_of(col.begin(), col.end(), [](int e) { return e < 0; }))
        fail("negative exponent in monomial " + std::to_string(j));
      if (!seen.insert(col).second) fail("repeated monomial " + std::to_string(j));
    }
    if (!mu.empty()) {
      if (static_cast<int>(mu.size()) != nvars) fail("mu has wrong length");
      if (std::any_of(mu.begin(), mu.end(), [](int e) { return e < 0; })) fail("negative exponent in mu");
    }
  }

  /// Exponent matrix with the all-ones row on top: (n+2) x (n+2).
  QMatrix extended_matrix() const {
    const std::size_t m = n_monomials();
    QMatrix mt(static_cast<std::size_t>(nvars) + 1, m);
    for (std::size_t j = 0; j < m; ++j) {
      mt(0, j) = Rational(1);
      for (int i = 0; i < nvars; ++i) mt(static_cast<std::size_t>(i) + 1, j) = Rational(column(j)[static_cast<std::size_t>(i)]);
    }
    return mt;
  }

  friend bool operator==(const PolySpec&, const PolySpec&) = default;
};

/// True iff the extended exponent matrix has full rank, i.e. f is not
/// quasi-homogeneous.
inline bool check_condition_C(const PolySpec& spec) {
  spec.validate();
  QMatrix mt = spec.extended_matrix();
  return rank(mt) == mt.rows() && mt.rows() == mt.cols();
}

struct RelationData {
  std::vector<Rational> rho;  // alpha_{n+2} = sum rho_j alpha_j
  long r_abs = 0;
  long r = 0;
  std::vector<long> p;  // r_abs * rho_j
  std::vector<int> H, J_plus, J_minus;
  std::vector<long> Delta, delta;  // length n+2
  long d = 0, h = 0;
  std::vector<Rational> eta;  // first column of Mt^{-1}
  Rational c;
  QMatrix mt_inverse;

  friend bool operator==(const RelationData&, const RelationData&) = default;
};

inline RelationData analyze(const PolySpec& spec) {
  spec.validate();
  const std::size_t m = spec.n_monomials();
  const std::size_t nv = static_cast<std::size_t>(spec.nvars);
  QMatrix mt = spec.extended_matrix();
  auto mt_inv = inverse(mt);
  if (!mt_inv) throw Error(ErrorKind::QuasiHomogeneous, "f is quasi-homogeneous (extended exponent matrix is singular)");

  QMatrix base(nv, nv);
  std::vector<Rational> target(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = 0; j < nv; ++j) base(i, j) = Rational(spec.column(j)[i]);
    target[i] = Rational(spec.lambda_monomial[i]);
  }
  auto rho = solve(base, target);
  if (!rho) throw Error(ErrorKind::MalformedSpec, "the unit-coefficient monomials are linearly dependent");

  RelationData rd;
  rd.rho = *rho;
  BigInt den = 1;
  for (const auto& x : rd.rho) den = lcm(den, x.den());
  if (!den.fits_slong_p()) throw Error(ErrorKind::MalformedSpec, "relation exponent too large");
  rd.r_abs = den.get_si();

  std::vector<long> lhs(m, 0), rhs(m, 0);
  lhs[m - 1] = rd.r_abs;
  for (std::size_t j = 0; j < nv; ++j) {
    Rational pj = rd.rho[j] * Rational(rd.r_abs);
    rd.p.push_back(pj.num().get_si());
    if (pj.sign() == 0) {
      rd.H.push_back(static_cast<int>(j));
    } else if (pj.sign() > 0) {
      rd.J_plus.push_back(static_cast<int>(j));
      rhs[j] = rd.p.back();
    } else {
      rd.J_minus.push_back(static_cast<int>(j));
      lhs[j] = -rd.p.back();
    }
  }
  long wl = std::accumulate(lhs.begin(), lhs.end(), 0L);
  long wr = std::accumulate(rhs.begin(), rhs.end(), 0L);
  if (wl == wr) throw std::logic_error("balanced relation although the extended matrix is invertible");
  if (wl > wr) {
    rd.Delta = lhs;
    rd.delta = rhs;
    rd.r = rd.r_abs;
  } else {
    rd.Delta = rhs;
    rd.delta = lhs;
    rd.r = -rd.r_abs;
  }
  rd.d = std::min(wl, wr);
  rd.h = std::max(wl, wr) - rd.d;

  rd.eta = mt_inv->column(0);
  rd.mt_inverse = *mt_inv;
  Rational num(1), dnm(1);
  for (std::size_t j = 0; j < m; ++j) {
    if (rd.delta[j]) num *= rd.eta[j].pow(rd.delta[j]);
    if (rd.Delta[j]) dnm *= rd.eta[j].pow(rd.Delta[j]);
  }
  rd.c = num / dnm;
  return rd;
}

/// Consumption order of the monomials of m^gamma.
enum class ChainOrder { Ascending, Descending };

/// Chain of degree-one factors representing m^gamma.mu modulo the Jacobian
/// relations, together with its leading a-coefficient kappa.
struct ChiChain {
  HomogChain chain;
  Rational kappa;

  friend bool operator==(const ChiChain&, const ChiChain&) = default;
};

inline ChiChain chi_chain(const PolySpec& spec, const RelationData& rd, const std::vector<long>& gamma,
                          ChainOrder order = ChainOrder::Ascending) {
  const std::size_t m = spec.n_monomials();
  const std::size_t nv = static_cast<std::size_t>(spec.nvars);
  if (gamma.size() != m) throw Error(ErrorKind::MalformedSpec, "gamma has wrong length");
  for (int j : rd.H)
    if (gamma[static_cast<std::size_t>(j)] != 0)
      throw Error(ErrorKind::GammaTouchesH, "gamma uses monomial " + std::to_string(j) + " which lies in H");

  std::vector<std::size_t> steps;
  for (std::size_t j = 0; j < m; ++j)
    for (long k = 0; k < gamma[j]; ++k) steps.push_back(j);
  if (order == ChainOrder::Descending) std::reverse(steps.begin(), steps.end());

  ChiChain out;
  out.kappa = Rational(1);
  std::vector<long> acc(m, 0);
  for (std::size_t j : steps) {
    Rational theta;
    for (std::size_t i = 0; i < nv; ++i) {
      // Gamma_i = beta_i + sum_l alpha_{i,l} acc_l
      long g = spec.mu_exponent(i);
      for (std::size_t l = 0; l < m; ++l) g += static_cast<long>(spec.column(l)[i]) * acc[l];
      theta += rd.mt_inverse(j, i + 1) * Rational(g + 1);
    }
    const Rational& eta = rd.eta[j];
    out.chain.factors.insert(out.chain.factors.begin(), {eta, theta});
    out.kappa *= eta;
    ++acc[j];
  }
  return out;
}

struct GMOperator {
  PolySpec spec;
  ChiChain chain_dh, chain_d;
  ABRational P_dh, P_d;  // monic homogeneous of degrees d+h and d
  Rational c;
  long r = 0;
  long d = 0, h = 0;

  /// P_dh - c.lambda^r.P_d
  ABElement full() const {
    return to_laurent_element(P_dh) -
           to_laurent_element(P_d).scaled(LaurentLambda::monomial(c, static_cast<int>(r)));
  }
  /// The coefficient c.lambda^r.
  LaurentLambda c_lambda_r() const { return LaurentLambda::monomial(c, static_cast<int>(r)); }

  friend bool operator==(const GMOperator&, const GMOperator&) = default;
};

inline GMOperator build_operator(const PolySpec& spec, const RelationData& rd) {
  GMOperator g;
  g.spec = spec;
  g.chain_dh = chi_chain(spec, rd, rd.Delta);
  g.chain_d = chi_chain(spec, rd, rd.delta);
  g.P_dh = g.chain_dh.chain.expand().scaled(g.chain_dh.kappa.inverse());
  g.P_d = g.chain_d.chain.expand().scaled(g.chain_d.kappa.inverse());
  g.c = g.chain_d.kappa / g.chain_dh.kappa;
  if (g.c != rd.c) throw std::logic_error("chain normalization disagrees with the closed-form constant");
  g.r = rd.r;
  g.d = rd.d;
  g.h = rd.h;
  return g;
}

inline GMOperator build_operator(const PolySpec& spec) { return build_operator(spec, analyze(spec)); }

/// Whether consuming gamma in ascending and in descending monomial order
/// gives the same element of A (both normalized monic). A disagreement is
/// not an error: both represent the same class, only the representative
/// differs.
inline bool chain_paths_agree(const PolySpec& spec, const RelationData& rd, const std::vector<long>& gamma) {
  auto up = chi_chain(spec, rd, gamma, ChainOrder::Ascending);
  auto down = chi_chain(spec, rd, gamma, ChainOrder::Descending);
  return up.chain.expand().scaled(up.kappa.inverse()) == down.chain.expand().scaled(down.kappa.inverse());
}

/// Constant c of the operator for x1^D + x2^D + x3^D + x4^D + lambda.x1.x2.x3.x4
/// and the other members of that family: (D-4)^(D-4) / D^D.
inline Rational symmetric_family_constant(int total_degree) {
  return Rational(total_degree - 4).pow(total_degree - 4) / Rational(total_degree).pow(total_degree);
}

/// prod_{p = D-2, ..., 0} (a - 4(p+1)/D . b) - k.lambda^D.(a-3b)(a-2b)(a-b),
/// leftmost factor p = D-2, with k = symmetric_family_constant(D).
inline ABElement symmetric_family_bracket(int total_degree) {
  if (total_degree < 5) throw Error(ErrorKind::MalformedSpec, "family needs total degree >= 5");
  HomogChain top, low;
  for (int p = total_degree - 2; p >= 0; --p)
    top.factors.emplace_back(Rational(1), -Rational(4 * (p + 1)) / Rational(total_degree));
  for (int k = 3; k >= 1; --k) low.factors.emplace_back(Rational(1), Rational(-k));
  return to_laurent_element(top.expand()) -
         to_laurent_element(low.expand())
             .scaled(LaurentLambda::monomial(symmetric_family_constant(total_degree), total_degree));
}

/// (a - 4b) . bracket: the full operator of the family in closed form.
inline ABElement symmetric_family_operator(int total_degree) {
  return ABElement::linear(LaurentLambda(1), LaurentLambda(-4)) * symmetric_family_bracket(total_degree);
}

}  // namespace gmop
