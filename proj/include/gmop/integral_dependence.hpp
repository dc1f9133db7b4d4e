#pragma once

// Integral dependence of f over the ring generated by u_i = x_i.df/dx_i.
//
// Each monomial m_j of f is a linear combination of f, u_0, ..., u_n
// (row j of the inverse extended exponent matrix). Substituting these
// linear forms into m^Delta = lambda^r.m^delta gives a polynomial in f of
// degree d+h that vanishes identically.

#include <optional>
#include <string>
#include <vector>

#include "gmop/gm_engine.hpp"
#include "gmop/sparse_poly.hpp"

namespace gmop {

/// Row j: m_j = rows[j][0].f + sum_i rows[j][i+1].u_i.
struct LinearForms {
  std::vector<std::vector<Rational>> rows;

  /// Variables are (f, u_0, ..., u_n).
  LSparse form(std::size_t j) const {
    const int nv = static_cast<int>(rows[j].size());
    LSparse p(nv);
    for (int k = 0; k < nv; ++k) p += LSparse::variable(nv, k).scaled(LaurentLambda(rows[j][static_cast<std::size_t>(k)]));
    return p;
  }

  friend bool operator==(const LinearForms&, const LinearForms&) = default;
};

inline LinearForms linear_forms(const RelationData& rd) {
  LinearForms lf;
  for (std::size_t j = 0; j < rd.mt_inverse.rows(); ++j) lf.rows.push_back(rd.mt_inverse.row(j));
  return lf;
}

inline LinearForms linear_forms(const PolySpec& spec) { return linear_forms(analyze(spec)); }

inline std::vector<std::string> relation_variable_names(int nvars) {
  std::vector<std::string> names{"f"};
  for (int i = 0; i < nvars; ++i) names.push_back("u" + std::to_string(i));
  return names;
}

struct DependenceRelation {
  LinearForms forms;
  std::vector<long> Delta, delta;
  long r = 0;
  long degree = 0;      // d+h, the degree in f
  Rational normalizer;  // prod eta_j^Delta_j, the leading f-coefficient before normalization

  friend bool operator==(const DependenceRelation&, const DependenceRelation&) = default;

  /// (prod L_j^Delta_j - lambda^r.prod L_j^delta_j) / normalizer, expanded in
  /// the variables (f, u_0, ..., u_n).
  LSparse expand() const {
    LSparse top = LSparse::constant(static_cast<int>(forms.rows[0].size()), LaurentLambda(1));
    LSparse low = top;
    for (std::size_t j = 0; j < forms.rows.size(); ++j) {
      if (Delta[j]) top = top * forms.form(j).pow(static_cast<int>(Delta[j]));
      if (delta[j]) low = low * forms.form(j).pow(static_cast<int>(delta[j]));
    }
    LSparse rel = top - low.scaled(LaurentLambda::monomial(Rational(1), static_cast<int>(r)));
    return rel.scaled(LaurentLambda(normalizer.inverse()));
  }

  /// "prod L_j^Delta_j - lambda^r.prod L_j^delta_j" with the linear forms written out.
  std::string factored_str() const {
    const auto names = relation_variable_names(static_cast<int>(forms.rows[0].size()) - 1);
    auto side = [&](const std::vector<long>& e) {
      std::string s;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (!e[j]) continue;
        if (!s.empty()) s += "·";
        s += "(" + forms.form(j).str(names) + ")";
        if (e[j] > 1) s += "^" + std::to_string(e[j]);
      }
      return s.empty() ? std::string("1") : s;
    };
    return side(Delta) + " - " + LaurentLambda::lambda_pow(static_cast<int>(r)).str() + "·" + side(delta);
  }
};

inline DependenceRelation dependence_relation(const PolySpec& spec, const RelationData& rd) {
  DependenceRelation rel;
  rel.forms = linear_forms(rd);
  rel.Delta = rd.Delta;
  rel.delta = rd.delta;
  rel.r = rd.r;
  rel.degree = rd.d + rd.h;
  rel.normalizer = Rational(1);
  for (std::size_t j = 0; j < spec.n_monomials(); ++j)
    if (rd.Delta[j]) rel.normalizer *= rd.eta[j].pow(rd.Delta[j]);
  return rel;
}

inline DependenceRelation dependence_relation(const PolySpec& spec) { return dependence_relation(spec, analyze(spec)); }

/// f and u_i = x_i.df/dx_i as polynomials in the x-variables.
inline std::vector<LSparse> generator_polynomials(const PolySpec& spec) {
  const int nv = spec.nvars;
  std::vector<LSparse> out(static_cast<std::size_t>(nv) + 1, LSparse(nv));
  for (std::size_t j = 0; j < spec.n_monomials(); ++j) {
    const auto& e = spec.column(j);
    LaurentLambda coeff = j + 1 == spec.n_monomials() ? LaurentLambda::lambda_pow(1) : LaurentLambda(1);
    out[0] += LSparse::monomial(coeff, e);
    for (int i = 0; i < nv; ++i)
      if (e[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(i) + 1] += LSparse::monomial(coeff * Rational(e[static_cast<std::size_t>(i)]), e);
  }
  return out;
}

/// Substitutes the actual f and u_i into the expanded relation and checks
/// that the result is exactly zero.
inline bool verify_identity(const PolySpec& spec, const DependenceRelation& rel) {
  LSparse expanded = rel.expand();
  auto gens = generator_polynomials(spec);
  LSparse one = LSparse::constant(spec.nvars, LaurentLambda(1));
  return expanded.substitute(gens, one).is_zero();
}

inline bool verify_identity(const PolySpec& spec) { return verify_identity(spec, dependence_relation(spec)); }

}  // namespace gmop
