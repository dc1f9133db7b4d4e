#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace gmop;
using namespace gmop::testing;

namespace {

PolySpec make_spec(std::vector<std::vector<int>> monomials, std::vector<int> lam, std::vector<int> mu = {}) {
  PolySpec s;
  s.name = "inline";
  s.nvars = static_cast<int>(lam.size());
  s.monomials = std::move(monomials);
  s.lambda_monomial = std::move(lam);
  s.mu = std::move(mu);
  return s;
}

// Double-precision inverse of the extended matrix by Gauss-Jordan with
// partial pivoting, written independently of the exact linear algebra.
std::vector<std::vector<double>> float_inverse(const PolySpec& s) {
  const std::size_t m = s.n_monomials();
  std::vector<std::vector<double>> a(m, std::vector<double>(2 * m, 0.0));
  for (std::size_t j = 0; j < m; ++j) {
    a[0][j] = 1.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(s.nvars); ++i) a[i + 1][j] = s.column(j)[i];
  }
  for (std::size_t i = 0; i < m; ++i) a[i][m + i] = 1.0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col; r < m; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[piv], a[col]);
    double p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      for (std::size_t k = 0; k < 2 * m; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<double>> inv(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) inv[i][j] = a[i][m + j];
  return inv;
}

// Chain factors recomputed in floating point from the same recurrence.
std::vector<std::pair<double, double>> float_chain(const PolySpec& s, const std::vector<long>& gamma) {
  auto inv = float_inverse(s);
  const std::size_t m = s.n_monomials();
  std::vector<long> acc(m, 0);
  std::vector<std::pair<double, double>> out;
  for (std::size_t j = 0; j < m; ++j) {
    for (long k = 0; k < gamma[j]; ++k) {
      double theta = 0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(s.nvars); ++i) {
        long g = s.mu_exponent(i);
        for (std::size_t l = 0; l < m; ++l) g += s.column(l)[i] * acc[l];
        theta += inv[j][i + 1] * static_cast<double>(g + 1);
      }
      out.insert(out.begin(), {inv[j][0], theta});
      ++acc[j];
    }
  }
  return out;
}

void expect_relation_invariants(const PolySpec& s, const RelationData& rd) {
  const std::size_t m = s.n_monomials();
  long sD = 0, sd = 0;
  for (std::size_t j = 0; j < m; ++j) {
    EXPECT_TRUE(rd.Delta[j] == 0 || rd.delta[j] == 0);
    sD += rd.Delta[j];
    sd += rd.delta[j];
  }
  EXPECT_EQ(sD, rd.d + rd.h);
  EXPECT_EQ(sd, rd.d);
  EXPECT_GT(rd.h, 0);
  // m^Delta and m^delta agree as monomials in x.
  for (std::size_t i = 0; i < static_cast<std::size_t>(s.nvars); ++i) {
    long l = 0, r = 0;
    for (std::size_t j = 0; j < m; ++j) {
      l += rd.Delta[j] * s.column(j)[i];
      r += rd.delta[j] * s.column(j)[i];
    }
    EXPECT_EQ(l, r);
  }
  // eta sums to one and annihilates every exponent row.
  Rational total;
  for (const auto& e : rd.eta) total += e;
  EXPECT_EQ(total, q(1));
  for (std::size_t i = 0; i < static_cast<std::size_t>(s.nvars); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < m; ++j) acc += rd.eta[j] * Rational(s.column(j)[i]);
    EXPECT_EQ(acc, q(0));
  }
  // The lambda monomial appears with exponent |r|.
  EXPECT_EQ(std::max(rd.Delta[m - 1], rd.delta[m - 1]), rd.r_abs);
}

}  // namespace

TEST(GMEngine, ConditionC) {
  EXPECT_TRUE(check_condition_C(spec("e2")));
  EXPECT_TRUE(check_condition_C(spec("e3")));
  EXPECT_TRUE(check_condition_C(spec("e61")));
  EXPECT_FALSE(check_condition_C(spec("homog")));
  try {
    analyze(spec("homog"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QuasiHomogeneous);
  }
}

TEST(GMEngine, MalformedSpecs) {
  EXPECT_THROW(analyze(make_spec({{2, 0}, {2, 0}}, {1, 1})), Error);        // repeated monomial
  EXPECT_THROW(analyze(make_spec({{2, 0}}, {1, 1})), Error);                // too few monomials
  EXPECT_THROW(analyze(make_spec({{2, 0}, {0, 3}}, {1, 1, 0})), Error);     // wrong length
  EXPECT_THROW(analyze(make_spec({{2, -1}, {0, 3}}, {1, 1})), Error);       // negative exponent
}

TEST(GMEngine, SmallPlaneExample) {
  // f = x^2 + y^3 + lambda.x.y. The nonzero critical point is y = lambda^2/6,
  // x = -lambda^3/12, where f = -lambda^6/432, so s^1 = c.lambda^6 with c = -1/432.
  auto s = spec("e2");
  auto rd = analyze(s);
  EXPECT_EQ(rd.d, 5);
  EXPECT_EQ(rd.h, 1);
  EXPECT_EQ(rd.r, 6);
  EXPECT_EQ(rd.c, q(-1, 432));
  EXPECT_EQ(rd.eta, (std::vector<Rational>{q(-3), q(-2), q(6)}));
  expect_relation_invariants(s, rd);
}

TEST(GMEngine, ThreeVariableExample) {
  // f = x^2 + y^3 + z^4 + lambda.xyz. With L = lambda.xyz at a critical point,
  // x^2 = -L/2, y^3 = -L/3, z^4 = -L/4, so f = -L/12 and L^12 = -lambda^12 L^13 / 331776,
  // giving f = 27648 . lambda^-12.
  auto s = spec("e3");
  auto rd = analyze(s);
  EXPECT_EQ(rd.d, 12);
  EXPECT_EQ(rd.h, 1);
  EXPECT_EQ(rd.r, -12);
  EXPECT_EQ(rd.c, q(27648));
  expect_relation_invariants(s, rd);
}

TEST(GMEngine, HeadlineExample) {
  auto s = spec("e61");
  auto rd = analyze(s);
  EXPECT_EQ(rd.d, 61);
  EXPECT_EQ(rd.h, 15);
  EXPECT_EQ(rd.r, -61);
  EXPECT_EQ(rd.Delta, (std::vector<long>{34, 22, 20, 0}));
  EXPECT_EQ(rd.delta, (std::vector<long>{0, 0, 0, 61}));
  Rational expected = -(Rational(61).pow(61) * Rational(15).pow(15)) /
                      (Rational(34).pow(34) * Rational(22).pow(22) * Rational(20).pow(20));
  EXPECT_EQ(rd.c, expected);
  expect_relation_invariants(s, rd);
}

TEST(GMEngine, ChainMatchesFloatingPointRecurrence) {
  for (const char* name : {"e2", "e3", "e61", "quintic1", "quintic5", "e2_mu"}) {
    auto s = spec(name);
    auto rd = analyze(s);
    for (const auto* gamma : {&rd.Delta, &rd.delta}) {
      std::vector<long> g = *gamma;
      auto exact = chi_chain(s, rd, g);
      auto approx = float_chain(s, g);
      ASSERT_EQ(exact.chain.factors.size(), approx.size()) << name;
      for (std::size_t i = 0; i < approx.size(); ++i) {
        EXPECT_NEAR(exact.chain.factors[i].first.to_double(), approx[i].first, 1e-9) << name;
        EXPECT_NEAR(exact.chain.factors[i].second.to_double(), approx[i].second, 1e-7) << name;
      }
    }
  }
}

TEST(GMEngine, ChainSmallExample) {
  // For x^2 + y^3 + lambda.xy and m^gamma = (lambda.xy)^2 the two factors are
  // 6a - 5b (first step) and 6a - 10b (second step, placed on the left).
  auto s = spec("e2");
  auto rd = analyze(s);
  auto ch = chi_chain(s, rd, {0, 0, 2});
  HomogChain expected{{{q(6), q(-10)}, {q(6), q(-5)}}};
  EXPECT_EQ(ch.chain, expected);
  EXPECT_EQ(ch.kappa, q(36));
  EXPECT_EQ(ch.chain.expand(), ABRational::term(q(36), 0, 2) + ABRational::term(q(-90), 1, 1) +
                                   ABRational::term(q(20), 2, 0));
}

TEST(GMEngine, OperatorShape) {
  for (const char* name : {"e2", "e3", "e61", "quintic1", "e2_mu"}) {
    auto s = spec(name);
    auto g = build_operator(s);
    EXPECT_TRUE(g.P_dh.is_homogeneous());
    EXPECT_TRUE(g.P_d.is_homogeneous());
    EXPECT_EQ(g.P_dh.ab_degree(), g.d + g.h);
    EXPECT_EQ(g.P_d.ab_degree(), g.d);
    EXPECT_EQ(g.P_dh.mod_b(), QPoly::x().pow(static_cast<int>(g.d + g.h)));
    EXPECT_EQ(g.P_d.mod_b(), QPoly::x().pow(static_cast<int>(g.d)));
    EXPECT_EQ(g.full().a_degree(), g.d + g.h);
    EXPECT_TRUE(chain_paths_agree(s, analyze(s), analyze(s).Delta)) << name;
  }
}

TEST(GMEngine, MuShiftsOnlyTheBCoefficients) {
  auto plain = build_operator(spec("e2"));
  auto shifted = build_operator(spec("e2_mu"));
  EXPECT_EQ(plain.c, shifted.c);
  EXPECT_EQ(plain.P_dh.mod_b(), shifted.P_dh.mod_b());
  EXPECT_NE(plain.P_dh, shifted.P_dh);
}

TEST(GMEngine, RandomSpecsAreConsistent) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> ex(0, 5), nv(2, 3);
  int built = 0;
  while (built < 20) {
    int n = nv(rng);
    std::vector<std::vector<int>> mons;
    for (int j = 0; j < n; ++j) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& v : e) v = ex(rng);
      mons.push_back(e);
    }
    std::vector<int> lam(static_cast<std::size_t>(n));
    for (auto& v : lam) v = ex(rng);
    PolySpec s = make_spec(mons, lam);
    RelationData rd;
    try {
      rd = analyze(s);
    } catch (const Error&) {
      continue;
    }
    if (rd.d + rd.h > 40) continue;
    expect_relation_invariants(s, rd);
    // build_operator cross-checks the chain normalization kappa_delta/kappa_Delta
    // against the closed-form product of eta powers.
    GMOperator g;
    ASSERT_NO_THROW(g = build_operator(s, rd));
    EXPECT_EQ(g.c, rd.c);
    auto inv = float_inverse(s);
    double logc = 0;
    for (std::size_t j = 0; j < s.n_monomials(); ++j) {
      long e = rd.delta[j] - rd.Delta[j];
      if (e) logc += static_cast<double>(e) * std::log(std::abs(inv[j][0]));
    }
    EXPECT_NEAR(std::log(std::abs(rd.c.to_double())), logc, 1e-6);
    ++built;
  }
}

TEST(GMEngine, QuinticFamily) {
  // Symmetric critical point x = y = z = w = -lambda/5 has value lambda^5/3125,
  // and for h = 1 the singular value is c.lambda^5 itself.
  std::optional<GMOperator> first;
  for (int i = 1; i <= 8; ++i) {
    auto s = spec("quintic" + std::to_string(i));
    auto rd = analyze(s);
    EXPECT_EQ(rd.d, 4);
    EXPECT_EQ(rd.h, 1);
    EXPECT_EQ(rd.r, 5);
    EXPECT_EQ(rd.c, q(1, 3125)) << s.name;
    EXPECT_EQ(rd.c, symmetric_family_constant(5));
    auto g = build_operator(s, rd);
    if (!first) {
      first = g;
      EXPECT_EQ(g.P_d, ABRational::term(q(1), 0, 4) + ABRational::term(q(-10), 1, 3) +
                           ABRational::term(q(25), 2, 2) + ABRational::term(q(-15), 3, 1) +
                           ABRational::term(q(1), 4, 0));
    } else {
      EXPECT_EQ(g.P_dh, first->P_dh) << s.name;
      EXPECT_EQ(g.P_d, first->P_d) << s.name;
    }
  }
  EXPECT_EQ(symmetric_family_operator(5), first->full());
}

TEST(GMEngine, QuinticBracketIsThetaFourInvariant) {
  for (int D : {5, 6, 7}) {
    auto br = symmetric_family_bracket(D);
    EXPECT_EQ(theta_k(br, 4), br) << D;
  }
}

TEST(GMEngine, SexticFamilyMatchesClosedForm) {
  auto s = make_spec({{6, 0, 0, 0}, {0, 6, 0, 0}, {0, 0, 6, 0}, {0, 0, 0, 6}}, {1, 1, 1, 1});
  auto g = build_operator(s);
  // Critical point x = y = z = w = t with 6t^2 + lambda = 0, value lambda^3/108;
  // the relation has h = 2, r = 6, so s^2 = lambda^6/11664 = c.lambda^6.
  EXPECT_EQ(g.c, q(1, 11664));
  EXPECT_EQ(g.c, symmetric_family_constant(6));
  EXPECT_EQ(symmetric_family_operator(6), g.full());
}

TEST(GMEngine, UnusedVariableDirection) {
  // x^2 + y^3 + z^5 + lambda.xy: the z-monomial does not enter the relation.
  auto s = make_spec({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}, {1, 1, 0});
  auto rd = analyze(s);
  EXPECT_EQ(rd.H, (std::vector<int>{2}));
  EXPECT_EQ(rd.d, 5);
  EXPECT_EQ(rd.r, 6);
  try {
    chi_chain(s, rd, {0, 0, 1, 0});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GammaTouchesH);
  }
  EXPECT_NO_THROW(build_operator(s, rd));
}
