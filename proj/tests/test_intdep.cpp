#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace gmop;
using namespace gmop::testing;

namespace {

PolySpec make_spec(std::vector<std::vector<int>> monomials, std::vector<int> lam) {
  PolySpec s;
  s.name = "inline";
  s.nvars = static_cast<int>(lam.size());
  s.monomials = std::move(monomials);
  s.lambda_monomial = std::move(lam);
  return s;
}

// Value of the j-th term of f (lambda included for the last one) at x.
Rational term_value(const PolySpec& s, std::size_t j, const std::vector<Rational>& x, const Rational& lambda) {
  Rational v = j + 1 == s.n_monomials() ? lambda : Rational(1);
  for (std::size_t i = 0; i < x.size(); ++i) v *= x[i].pow(s.column(j)[i]);
  return v;
}

// f and x_i.df/dx_i at a point, computed term by term without the library.
std::vector<Rational> generator_values(const PolySpec& s, const std::vector<Rational>& x, const Rational& lambda) {
  std::vector<Rational> out(x.size() + 1);
  for (std::size_t j = 0; j < s.n_monomials(); ++j) {
    Rational t = term_value(s, j, x, lambda);
    out[0] += t;
    for (std::size_t i = 0; i < x.size(); ++i) out[i + 1] += t * Rational(s.column(j)[i]);
  }
  return out;
}

Rational evaluate(const LSparse& p, const std::vector<Rational>& vals, const Rational& lambda) {
  Rational acc;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c.evaluate(lambda);
    for (std::size_t k = 0; k < vals.size(); ++k) t *= vals[k].pow(e[k]);
    acc += t;
  }
  return acc;
}

}  // namespace

TEST(IntegralDependence, LinearFormsReproduceTerms) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 3);
  for (const char* name : {"e2", "e3", "quintic1", "quintic6", "e61"}) {
    auto s = spec(name);
    auto lf = linear_forms(s);
    ASSERT_EQ(lf.rows.size(), s.n_monomials());
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> x(static_cast<std::size_t>(s.nvars));
      for (auto& v : x) v = q(num(rng), den(rng));
      Rational lambda = q(num(rng) | 1, den(rng));
      auto g = generator_values(s, x, lambda);
      for (std::size_t j = 0; j < s.n_monomials(); ++j) {
        Rational combo;
        for (std::size_t k = 0; k < g.size(); ++k) combo += lf.rows[j][k] * g[k];
        ASSERT_EQ(combo, term_value(s, j, x, lambda)) << name << " row " << j;
      }
    }
  }
}

TEST(IntegralDependence, SmallPlaneForms) {
  // With f = x^2 + y^3 + lambda.xy, u0 = 2x^2 + lambda.xy, u1 = 3y^3 + lambda.xy:
  // x^2 = -3f + 2u0 + u1, y^3 = -2f + u0 + u1, lambda.xy = 6f - 3u0 - 2u1.
  auto lf = linear_forms(spec("e2"));
  EXPECT_EQ(lf.rows[0], (std::vector<Rational>{q(-3), q(2), q(1)}));
  EXPECT_EQ(lf.rows[1], (std::vector<Rational>{q(-2), q(1), q(1)}));
  EXPECT_EQ(lf.rows[2], (std::vector<Rational>{q(6), q(-3), q(-2)}));
}

TEST(IntegralDependence, FCoefficients) {
  EXPECT_EQ(linear_forms(spec("e3")).rows[3][0], q(-12));
  // z^5 does not enter the relation, so its form has no f-component.
  auto s = make_spec({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}, {1, 1, 0});
  auto lf = linear_forms(s);
  EXPECT_EQ(lf.rows[2], (std::vector<Rational>{q(0), q(0), q(0), q(1, 5)}));
  EXPECT_TRUE(verify_identity(s));
}

TEST(IntegralDependence, DegreesAndMonic) {
  struct Case {
    const char* name;
    long degree;
  };
  for (const Case& c : {Case{"e2", 6}, Case{"e3", 13}, Case{"quintic1", 5}, Case{"quintic8", 5}}) {
    auto rel = dependence_relation(spec(c.name));
    EXPECT_EQ(rel.degree, c.degree) << c.name;
    LSparse ex = rel.expand();
    EXPECT_EQ(ex.degree_in(0), c.degree) << c.name;
    LSparse lead = ex.coefficient_of(0, static_cast<int>(c.degree));
    EXPECT_EQ(lead, LSparse::constant(ex.nvars(), LaurentLambda(1))) << c.name;
    EXPECT_EQ(ex.total_degree(), c.degree) << c.name;
  }
}

TEST(IntegralDependence, VerifyIdentity) {
  for (const char* name : {"e2", "e3", "quintic1", "quintic3", "e2_mu"}) EXPECT_TRUE(verify_identity(spec(name))) << name;
}

TEST(IntegralDependence, VanishesAtRandomPoints) {
  // Evaluate the expanded relation at the values of (f, u) computed directly
  // from random points, independently of the symbolic substitution.
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  for (const char* name : {"e2", "e3", "quintic2"}) {
    auto s = spec(name);
    LSparse ex = dependence_relation(s).expand();
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> x(static_cast<std::size_t>(s.nvars));
      for (auto& v : x) v = q(num(rng) | 1, den(rng));
      Rational lambda = q(num(rng) | 1, den(rng));
      EXPECT_EQ(evaluate(ex, generator_values(s, x, lambda), lambda), q(0)) << name;
    }
  }
}

TEST(IntegralDependence, BrokenRelationIsDetected) {
  auto s = spec("e2");
  auto rel = dependence_relation(s);
  rel.r += 1;
  EXPECT_FALSE(verify_identity(s, rel));
  rel = dependence_relation(s);
  rel.forms.rows[0][0] += q(1);
  EXPECT_FALSE(verify_identity(s, rel));
}

TEST(IntegralDependence, FactoredText) {
  auto rel = dependence_relation(spec("e2"));
  std::string txt = rel.factored_str();
  EXPECT_NE(txt.find("λ^6"), std::string::npos);
  EXPECT_NE(txt.find("^3"), std::string::npos);
}
