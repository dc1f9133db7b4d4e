#pragma once

// Factorization of elements monic in a inside the b-adic completion of A.
//
// hensel_decompose splits p along the coprime factorization of p mod b.
// split_irregular writes an element whose initial form is rho.b^q.P0
// (P0 homogeneous monic of degree d-q) as
//   (rho.b^q + Z).(P0 + Q)
// with a totally irregular left factor and a regular right factor.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gmop/ode_export.hpp"
#include "gmop/qfactor.hpp"

namespace gmop {

/// Initial form has the same degree as the a-degree.
inline bool is_regular(const ABRational& p) {
  if (!p.is_monic_in_a()) throw Error(ErrorKind::NotMonic, "regularity test needs an element monic in a");
  return initial_form(p).ab_degree() == p.a_degree();
}

/// Initial form of a regular element (already monic in a).
inline ABRational bernstein_element(const ABRational& p) {
  if (!is_regular(p)) throw Error(ErrorKind::PreconditionInitialForm, "element is not regular");
  return initial_form(p);
}

struct FactorInfo {
  ABRational factor;
  QPoly mod_b_class;
  int rank = 0;
  bool regular = false;
  std::optional<ABRational> bernstein_element;

  friend bool operator==(const FactorInfo&, const FactorInfo&) = default;
};

struct FactorizationResult {
  std::vector<FactorInfo> factors;
  int trunc = 0;

  friend bool operator==(const FactorizationResult&, const FactorizationResult&) = default;

  ABRational product() const {
    ABRational prod = ABRational::one().truncated(trunc);
    for (const auto& f : factors) prod = prod * f.factor;
    return prod;
  }
};

namespace detail {

inline ABRational a_poly(const QPoly& p) { return ABRational::from_a_poly(p); }

/// Lifts p = F.G mod b^n with F = f0, G = g0 mod b (f0, g0 monic coprime).
inline std::pair<ABRational, ABRational> hensel_pair(const ABRational& p, const QPoly& f0, const QPoly& g0, int n) {
  auto [s, t] = bezout(f0, g0);  // s.f0 + t.g0 = 1
  ABRational f = a_poly(f0).truncated(n);
  ABRational g = a_poly(g0).truncated(n);
  const ABRational target = p.truncated(n);
  for (int k = 1; k < n; ++k) {
    ABRational err = target - f * g;
    if (err.is_zero()) break;
    if (err.b_order() < k) throw std::logic_error("Hensel lifting lost track of the b-order");
    std::vector<Rational> slice;
    for (const auto& [m, c] : err.terms()) {
      if (m.b != k) continue;
      if (static_cast<int>(slice.size()) <= m.a) slice.resize(static_cast<std::size_t>(m.a) + 1);
      slice[static_cast<std::size_t>(m.a)] = c;
    }
    if (slice.empty()) continue;
    QPoly e(std::move(slice));
    // X.g0 + f0.Y = e with deg X < deg f0, deg Y < deg g0; at b-order k the
    // correction terms commute with a modulo b^(k+1).
    QPoly x = divmod(e * t, f0).second;
    QPoly y = divmod(e * s, g0).second;
    f += a_poly(x).b_shift(k).truncated(n);
    g += a_poly(y).b_shift(k).truncated(n);
  }
  return {f, g};
}

inline void check_pieces(const QPoly& whole, const std::vector<QPoly>& pieces) {
  QPoly prod = QPoly::constant(Rational(1));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].is_monic()) throw Error(ErrorKind::NotMonic, "spectral piece is not monic");
    for (std::size_t j = 0; j < i; ++j)
      if (gcd(pieces[i], pieces[j]).degree() > 0) throw Error(ErrorKind::NotCoprime, "spectral pieces share a factor");
    prod = prod * pieces[i];
  }
  if (!(prod == whole)) throw Error(ErrorKind::NotCoprime, "spectral pieces do not multiply to the class mod b");
}

}  // namespace detail

/// Factors p (monic in a, rational coefficients) as F_1 ... F_l modulo b^n,
/// F_i = pieces[i] mod b, leftmost factor first.
inline FactorizationResult hensel_decompose(const ABRational& p, int n, const std::vector<QPoly>& pieces) {
  if (n < 2) throw Error(ErrorKind::TruncationTooSmall, "truncation order must be at least 2");
  if (!p.is_monic_in_a()) throw Error(ErrorKind::NotMonic, "Hensel decomposition needs an element monic in a");
  const QPoly whole = p.mod_b();
  detail::check_pieces(whole, pieces);

  FactorizationResult out;
  out.trunc = n;
  ABRational rest = p.truncated(n);
  QPoly rest_class = whole;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    ABRational f;
    if (i + 1 == pieces.size()) {
      f = rest;
    } else {
      rest_class = exact_quotient(rest_class, pieces[i]);
      auto [left, right] = detail::hensel_pair(rest, pieces[i], rest_class, n);
      f = left;
      rest = right;
    }
    FactorInfo info;
    info.factor = f;
    info.mod_b_class = pieces[i];
    info.rank = f.a_degree();
    info.regular = is_regular(f);
    if (info.regular) info.bernstein_element = initial_form(f);
    out.factors.push_back(std::move(info));
  }
  return out;
}

inline FactorizationResult hensel_decompose(const ABRational& p, int n) {
  if (!p.is_monic_in_a()) throw Error(ErrorKind::NotMonic, "Hensel decomposition needs an element monic in a");
  return hensel_decompose(p, n, coprime_split(p.mod_b()));
}

/// Coefficients must be free of lambda.
inline FactorizationResult hensel_decompose(const ABElement& p, int n) {
  return hensel_decompose(to_rational_element(p), n);
}

struct IrregularSplit {
  ABRational left;   // rho.b^q + Z
  ABRational right;  // P0 + Q
  ABRational regular_initial;  // P0
  Rational rho;
  int q = 0, d = 0, h = 0;
  int trunc = 0;

  friend bool operator==(const IrregularSplit&, const IrregularSplit&) = default;

  ABRational Z() const { return left - ABRational::term(rho, q, 0); }
  ABRational Q() const { return right - regular_initial; }
};

/// Splits p = (rho.b^q + Z).(P0 + Q) modulo b^n, where the initial form of p
/// is rho.b^q.P0, d is its degree and h = a_degree(p) - d >= 1.
inline IrregularSplit split_irregular(const ABRational& p, int n) {
  if (n < 2) throw Error(ErrorKind::TruncationTooSmall, "truncation order must be at least 2");
  if (!p.is_monic_in_a()) throw Error(ErrorKind::NotMonic, "splitting needs an element monic in a");
  const int total = p.a_degree();
  const ABRational init = initial_form(p);
  IrregularSplit out;
  out.d = init.ab_degree();
  out.h = total - out.d;
  out.trunc = n;
  if (out.h == 0) throw Error(ErrorKind::HIsZero, "initial form has full degree, the element is regular");
  out.q = init.b_order();
  const int low_rank = out.d - out.q;
  out.rho = init.coefficient(out.q, low_rank);
  if (out.rho.is_zero() || init.a_degree() != low_rank)
    throw Error(ErrorKind::PreconditionInitialForm, "initial form is not rho.b^q times a monic element");
  out.regular_initial = init.b_shift(-out.q).scaled(out.rho.inverse());

  const ABRational target = p.truncated(n);
  ABRational left = ABRational::term(out.rho, out.q, 0).truncated(n);
  ABRational right = out.regular_initial.truncated(n);
  const ABRational divisor = out.regular_initial;
  const Rational rho_inv = out.rho.inverse();
  for (int deg = out.d + 1; deg <= n + total; ++deg) {
    ABRational gap = (target - left * right).homogeneous_part(deg);
    if (gap.is_zero()) continue;
    // gap = xi.P0 + R with R = rho.b^q.eta
    auto [xi, rem] = right_divide(gap.as_exact(), divisor);
    left += xi.truncated(n);
    if (!rem.is_zero()) right += rem.b_shift(-out.q).scaled(rho_inv).truncated(n);
  }
  out.left = left;
  out.right = right;
  return out;
}

struct PipelineReport {
  Rational lambda;
  int trunc = 0;
  QPoly mod_b_class;
  FactorizationResult blocks;
  int zero_block_rank = 0;
  bool zero_block_regular = false;
  int q = 0;                 // b-order of the zero block's initial form
  int regular_rank_bound = 0;  // rank of the regular part, d - q
  std::optional<ABRational> bernstein_element;
  std::optional<QPoly> bernstein_poly;
  std::optional<ABRational> quotient;  // P_d = quotient . bernstein_element
  bool divides_P_d = false;

  friend bool operator==(const PipelineReport&, const PipelineReport&) = default;
};

/// Specializes lambda, factors P along its spectral blocks, extracts the
/// regular part of the eigenvalue-0 block and checks that its Bernstein
/// element right-divides P_d.
inline PipelineReport regular_quotient_pipeline(const GMOperator& g, const Rational& lambda, int n) {
  if (lambda.is_zero()) throw Error(ErrorKind::InvalidLambda, "lambda must be nonzero");
  PipelineReport rep;
  rep.lambda = lambda;
  rep.trunc = n;
  const ABRational p = specialize(g.full(), lambda);
  rep.mod_b_class = p.mod_b();
  rep.blocks = hensel_decompose(p, n);

  const FactorInfo* zero = nullptr;
  for (const auto& f : rep.blocks.factors)
    if (f.mod_b_class[0].is_zero()) zero = &f;
  if (!zero) return rep;

  rep.zero_block_rank = zero->rank;
  rep.zero_block_regular = zero->regular;
  ABRational bern;
  if (zero->regular) {
    bern = *zero->bernstein_element;
    rep.regular_rank_bound = zero->rank;
  } else {
    IrregularSplit sp = split_irregular(zero->factor, n);
    rep.q = sp.q;
    rep.regular_rank_bound = sp.d - sp.q;
    bern = sp.regular_initial;
  }
  rep.bernstein_element = bern;
  rep.bernstein_poly = bernstein_polynomial(bern);
  auto [quot, rem] = right_divide(g.P_d, bern);
  rep.divides_P_d = rem.is_zero();
  if (rep.divides_P_d) rep.quotient = quot;
  return rep;
}

}  // namespace gmop
