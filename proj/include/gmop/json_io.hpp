#pragma once

// JSON forms of the engine's values. Rationals are strings "p/q", Laurent
// polynomials in lambda are lists of [exponent, "p/q"] pairs, and every
// result type converts both ways so that from_json(to_json(x)) == x.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmop/factor_engine.hpp"
#include "gmop/integral_dependence.hpp"
#include "gmop/numeric_verify.hpp"

namespace gmop {

using nlohmann::json;

inline void to_json(json& j, const Rational& r) { j = r.str(); }
inline void from_json(const json& j, Rational& r) {
  if (j.is_number_integer()) r = Rational(j.get<long long>());
  else r = Rational::parse(j.get<std::string>());
}

inline void to_json(json& j, const LaurentLambda& l) {
  j = json::array();
  for (const auto& [e, c] : l.terms()) j.push_back(json::array({e, c.str()}));
}
inline void from_json(const json& j, LaurentLambda& l) {
  l = LaurentLambda();
  for (const auto& t : j) l += LaurentLambda::monomial(t.at(1).get<Rational>(), t.at(0).get<int>());
}

template <Coefficient C>
void to_json(json& j, const UniPoly<C>& p) {
  j = p.coeffs();
}
template <Coefficient C>
void from_json(const json& j, UniPoly<C>& p) {
  p = UniPoly<C>(j.get<std::vector<C>>());
}

template <Coefficient C>
void to_json(json& j, const BasicElement<C>& x) {
  j = json::object();
  j["trunc"] = x.trunc() ? json(*x.trunc()) : json(nullptr);
  json terms = json::array();
  for (const auto& [m, c] : x.terms()) terms.push_back({{"b", m.b}, {"a", m.a}, {"c", c}});
  j["terms"] = terms;
}
template <Coefficient C>
void from_json(const json& j, BasicElement<C>& x) {
  BasicElement<C> r;
  for (const auto& t : j.at("terms")) r += BasicElement<C>::term(t.at("c").get<C>(), t.at("b").get<int>(), t.at("a").get<int>());
  if (!j.at("trunc").is_null()) r = r.truncated(j.at("trunc").get<int>());
  x = r;
}

inline void to_json(json& j, const HomogChain& c) {
  j = json::array();
  for (const auto& [eta, theta] : c.factors) j.push_back(json::array({eta, theta}));
}
inline void from_json(const json& j, HomogChain& c) {
  c.factors.clear();
  for (const auto& f : j) c.factors.emplace_back(f.at(0).get<Rational>(), f.at(1).get<Rational>());
}

inline void to_json(json& j, const PolySpec& s) {
  j = json::object();
  if (!s.name.empty()) j["name"] = s.name;
  j["nvars"] = s.nvars;
  j["monomials"] = s.monomials;
  j["lambda_monomial"] = s.lambda_monomial;
  j["mu"] = s.mu.empty() ? std::vector<int>(static_cast<std::size_t>(s.nvars), 0) : s.mu;
}
inline void from_json(const json& j, PolySpec& s) {
  try {
    s.name = j.value("name", std::string());
    s.nvars = j.at("nvars").get<int>();
    s.monomials = j.at("monomials").get<std::vector<std::vector<int>>>();
    s.lambda_monomial = j.at("lambda_monomial").get<std::vector<int>>();
    s.mu = j.contains("mu") ? j.at("mu").get<std::vector<int>>() : std::vector<int>{};
    if (std::all_of(s.mu.begin(), s.mu.end(), [](int e) { return e == 0; })) s.mu.clear();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad spec: ") + e.what());
  }
  s.validate();
}

inline void to_json(json& j, const QMatrix& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(m.row(i));
}
inline void from_json(const json& j, QMatrix& m) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  m = QMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = j.at(i).at(k).get<Rational>();
}

inline void to_json(json& j, const RelationData& rd) {
  j = {{"rho", rd.rho},         {"r_abs", rd.r_abs}, {"r", rd.r},         {"p", rd.p},
       {"H", rd.H},             {"J_plus", rd.J_plus}, {"J_minus", rd.J_minus},
       {"Delta", rd.Delta},     {"delta", rd.delta}, {"d", rd.d},         {"h", rd.h},
       {"eta", rd.eta},         {"c", rd.c},         {"mt_inverse", rd.mt_inverse}};
}
inline void from_json(const json& j, RelationData& rd) {
  j.at("rho").get_to(rd.rho);
  j.at("r_abs").get_to(rd.r_abs);
  j.at("r").get_to(rd.r);
  j.at("p").get_to(rd.p);
  j.at("H").get_to(rd.H);
  j.at("J_plus").get_to(rd.J_plus);
  j.at("J_minus").get_to(rd.J_minus);
  j.at("Delta").get_to(rd.Delta);
  j.at("delta").get_to(rd.delta);
  j.at("d").get_to(rd.d);
  j.at("h").get_to(rd.h);
  j.at("eta").get_to(rd.eta);
  j.at("c").get_to(rd.c);
  j.at("mt_inverse").get_to(rd.mt_inverse);
}

inline void to_json(json& j, const ChiChain& c) { j = {{"chain", c.chain}, {"kappa", c.kappa}}; }
inline void from_json(const json& j, ChiChain& c) {
  j.at("chain").get_to(c.chain);
  j.at("kappa").get_to(c.kappa);
}

inline void to_json(json& j, const GMOperator& g) {
  j = {{"spec", g.spec}, {"chain_dh", g.chain_dh}, {"chain_d", g.chain_d}, {"P_dh", g.P_dh},
       {"P_d", g.P_d},   {"c", g.c},               {"r", g.r},             {"d", g.d},
       {"h", g.h}};
}
inline void from_json(const json& j, GMOperator& g) {
  j.at("spec").get_to(g.spec);
  j.at("chain_dh").get_to(g.chain_dh);
  j.at("chain_d").get_to(g.chain_d);
  j.at("P_dh").get_to(g.P_dh);
  j.at("P_d").get_to(g.P_d);
  j.at("c").get_to(g.c);
  j.at("r").get_to(g.r);
  j.at("d").get_to(g.d);
  j.at("h").get_to(g.h);
}

inline void to_json(json& j, const DiffOp& op) {
  j = json::array();
  for (const auto& [k, p] : op.coeffs()) j.push_back({{"order", k}, {"coeff", p}});
}
inline void from_json(const json& j, DiffOp& op) {
  DiffOp::Coeffs c;
  for (const auto& t : j) c[t.at("order").get<int>()] = t.at("coeff").get<LPoly>();
  op = DiffOp(std::move(c));
}

inline void to_json(json& j, const SingularValues& s) { j = {{"h", s.h}, {"rhs", s.rhs}}; }
inline void from_json(const json& j, SingularValues& s) {
  j.at("h").get_to(s.h);
  j.at("rhs").get_to(s.rhs);
}

inline void to_json(json& j, const FactorInfo& f) {
  j = {{"factor", f.factor}, {"mod_b_class", f.mod_b_class}, {"rank", f.rank}, {"regular", f.regular}};
  j["bernstein_element"] = f.bernstein_element ? json(*f.bernstein_element) : json(nullptr);
}
inline void from_json(const json& j, FactorInfo& f) {
  j.at("factor").get_to(f.factor);
  j.at("mod_b_class").get_to(f.mod_b_class);
  j.at("rank").get_to(f.rank);
  j.at("regular").get_to(f.regular);
  if (j.at("bernstein_element").is_null()) f.bernstein_element.reset();
  else f.bernstein_element = j.at("bernstein_element").get<ABRational>();
}

inline void to_json(json& j, const FactorizationResult& r) { j = {{"trunc", r.trunc}, {"factors", r.factors}}; }
inline void from_json(const json& j, FactorizationResult& r) {
  j.at("trunc").get_to(r.trunc);
  j.at("factors").get_to(r.factors);
}

inline void to_json(json& j, const IrregularSplit& s) {
  j = {{"left", s.left}, {"right", s.right}, {"regular_initial", s.regular_initial},
       {"rho", s.rho},   {"q", s.q},         {"d", s.d},
       {"h", s.h},       {"trunc", s.trunc}};
}
inline void from_json(const json& j, IrregularSplit& s) {
  j.at("left").get_to(s.left);
  j.at("right").get_to(s.right);
  j.at("regular_initial").get_to(s.regular_initial);
  j.at("rho").get_to(s.rho);
  j.at("q").get_to(s.q);
  j.at("d").get_to(s.d);
  j.at("h").get_to(s.h);
  j.at("trunc").get_to(s.trunc);
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}
template <class T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

inline void to_json(json& j, const PipelineReport& r) {
  j = {{"lambda", r.lambda},
       {"trunc", r.trunc},
       {"mod_b_class", r.mod_b_class},
       {"blocks", r.blocks},
       {"zero_block_rank", r.zero_block_rank},
       {"zero_block_regular", r.zero_block_regular},
       {"q", r.q},
       {"regular_rank_bound", r.regular_rank_bound},
       {"bernstein_element", optional_json(r.bernstein_element)},
       {"bernstein_poly", optional_json(r.bernstein_poly)},
       {"quotient", optional_json(r.quotient)},
       {"divides_P_d", r.divides_P_d}};
}
inline void from_json(const json& j, PipelineReport& r) {
  j.at("lambda").get_to(r.lambda);
  j.at("trunc").get_to(r.trunc);
  j.at("mod_b_class").get_to(r.mod_b_class);
  j.at("blocks").get_to(r.blocks);
  j.at("zero_block_rank").get_to(r.zero_block_rank);
  j.at("zero_block_regular").get_to(r.zero_block_regular);
  j.at("q").get_to(r.q);
  j.at("regular_rank_bound").get_to(r.regular_rank_bound);
  r.bernstein_element = optional_from<ABRational>(j.at("bernstein_element"));
  r.bernstein_poly = optional_from<QPoly>(j.at("bernstein_poly"));
  r.quotient = optional_from<ABRational>(j.at("quotient"));
  j.at("divides_P_d").get_to(r.divides_P_d);
}

inline void to_json(json& j, const LinearForms& f) { j = f.rows; }
inline void from_json(const json& j, LinearForms& f) { j.get_to(f.rows); }

inline void to_json(json& j, const DependenceRelation& r) {
  j = {{"forms", r.forms}, {"Delta", r.Delta}, {"delta", r.delta},
       {"r", r.r},         {"degree", r.degree}, {"normalizer", r.normalizer}};
}
inline void from_json(const json& j, DependenceRelation& r) {
  j.at("forms").get_to(r.forms);
  j.at("Delta").get_to(r.Delta);
  j.at("delta").get_to(r.delta);
  j.at("r").get_to(r.r);
  j.at("degree").get_to(r.degree);
  j.at("normalizer").get_to(r.normalizer);
}

template <Coefficient C>
json sparse_to_json(const SparsePoly<C>& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"c", c}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}
template <Coefficient C>
SparsePoly<C> sparse_from_json(const json& j) {
  SparsePoly<C> p(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<std::vector<int>>(), t.at("c").get<C>());
  return p;
}

}  // namespace gmop

namespace std {
template <class T>
void to_json(nlohmann::json& j, const complex<T>& z) {
  j = nlohmann::json::array({z.real(), z.imag()});
}
template <class T>
void from_json(const nlohmann::json& j, complex<T>& z) {
  z = complex<T>(j.at(0).get<T>(), j.at(1).get<T>());
}
}  // namespace std

namespace gmop {

inline void to_json(json& j, const CriticalValue& v) {
  j = {{"value", v.value}, {"residual", v.residual}, {"point", v.point}};
}
inline void from_json(const json& j, CriticalValue& v) {
  j.at("value").get_to(v.value);
  j.at("residual").get_to(v.residual);
  j.at("point").get_to(v.point);
}

inline void to_json(json& j, const CriticalReport& r) {
  j = {{"lambda", r.lambda},       {"h", r.h},
       {"rhs", r.rhs},             {"found", r.found},
       {"predicted", r.predicted}, {"max_mismatch", r.max_mismatch},
       {"n_starts", r.n_starts},   {"n_converged", r.n_converged},
       {"n_failed", r.n_failed}};
}
inline void from_json(const json& j, CriticalReport& r) {
  j.at("lambda").get_to(r.lambda);
  j.at("h").get_to(r.h);
  j.at("rhs").get_to(r.rhs);
  j.at("found").get_to(r.found);
  j.at("predicted").get_to(r.predicted);
  j.at("max_mismatch").get_to(r.max_mismatch);
  j.at("n_starts").get_to(r.n_starts);
  j.at("n_converged").get_to(r.n_converged);
  j.at("n_failed").get_to(r.n_failed);
}

inline PolySpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open spec file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "'" + path + "' is not valid JSON: " + e.what());
  }
  return j.get<PolySpec>();
}

}  // namespace gmop
