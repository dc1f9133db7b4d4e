#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace gmop;
using namespace gmop::testing;

namespace {

const ABRational A = ABRational::gen_a();
const ABRational B = ABRational::gen_b();
const QPoly X = QPoly::x();

QPoly c(long v, long den = 1) { return QPoly::constant(q(v, den)); }

// (a - (j-1)b) ... (a - b).a, which equals b^j.(b^{-1}.a)^j.
ABRational staircase(int j) {
  HomogChain ch;
  for (int k = j - 1; k >= 0; --k) ch.factors.emplace_back(q(1), q(-k));
  return ch.expand();
}

HomogChain random_chain(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
  HomogChain ch;
  for (int i = 0; i < len; ++i) ch.factors.emplace_back(q(1), q(num(rng), den(rng)));
  return ch;
}

}  // namespace

TEST(EulerForm, Examples) {
  EXPECT_EQ(euler_form(A), X + c(1));
  EXPECT_EQ(euler_form(B), c(1));
  EXPECT_EQ(euler_form(B * A), X + c(1));
  EXPECT_EQ(euler_form(A.pow(2)), (X + c(1)) * (X + c(2)));
  // b^{-1}(a - t.b) = theta + 1 - t
  EXPECT_EQ(euler_form(A - B.scaled(q(5, 2))), X - c(3, 2));
  EXPECT_THROW(euler_form(A + B * B), Error);
}

TEST(EulerForm, StaircaseIsPowerOfThetaPlusOne) {
  // b^{-1}.a = D.s = theta + 1, so b^{-j}.T_j = (theta + 1)^j.
  for (int j = 1; j <= 10; ++j) EXPECT_EQ(euler_form(staircase(j)), (X + c(1)).pow(j)) << j;
}

TEST(EulerForm, ShiftedMultiplicativity) {
  // D^q.E(theta) = E(theta + q).D^q, hence E_{pr}(x) = E_p(x + deg r).E_r(x).
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> len(1, 5);
  for (int t = 0; t < 100; ++t) {
    ABRational p = random_chain(rng, len(rng)).expand();
    ABRational r = random_chain(rng, len(rng)).expand();
    ASSERT_EQ(euler_form(p * r), euler_form(p).shifted(q(r.ab_degree())) * euler_form(r));
  }
}

TEST(Bernstein, StaircaseAndPowers) {
  for (int j = 1; j <= 8; ++j) EXPECT_EQ(bernstein_polynomial(staircase(j)), X.pow(j));
  // a^d gives x(x-1)...(x-d+1).
  for (int d = 1; d <= 6; ++d) {
    QPoly expected = c(1);
    for (int k = 0; k < d; ++k) expected = expected * (X - c(k));
    EXPECT_EQ(bernstein_polynomial(A.pow(d)), expected);
  }
  EXPECT_THROW(bernstein_polynomial(A.scaled(q(2))), Error);
  EXPECT_THROW(bernstein_polynomial(A + B * B), Error);
}

TEST(Bernstein, RoundTrip) {
  // (-b)^d.B(-b^{-1}a) with B = sum beta_k x^k is sum beta_k (-1)^{d+k} b^d.(b^{-1}a)^k,
  // and b^d.(b^{-1}a)^k = b^{d-k}.T_k lies in A since k <= d.
  std::mt19937_64 rng(42);
  for (int t = 0; t < 30; ++t) {
    ABRational p = random_chain(rng, 1 + t % 6).expand();
    int d = p.ab_degree();
    QPoly bp = bernstein_polynomial(p);
    ASSERT_EQ(bp.degree(), d);
    ABRational back;
    for (int k = 0; k <= d; ++k) {
      Rational coeff = (d + k) % 2 ? -bp[k] : bp[k];
      back += (B.pow(d - k) * staircase(k)).scaled(coeff);
    }
    ASSERT_EQ(back, p);
  }
}

TEST(DiffOp, WeylRelation) {
  DiffOp D = DiffOp::term(LaurentLambda(1), 0, 1);
  DiffOp S = DiffOp::term(LaurentLambda(1), 1, 0);
  EXPECT_EQ(D * S - S * D, DiffOp::term(LaurentLambda(1), 0, 0));
  EXPECT_EQ(DiffOp::theta(), S * D);
  // D.theta = (theta + 1).D
  EXPECT_EQ(D * DiffOp::theta(), (DiffOp::theta() + DiffOp::term(LaurentLambda(1), 0, 0)) * D);
}

TEST(DiffOp, EulerOperatorOfStaircase) {
  // (theta+1)^j = (D.s)^j as differential operators.
  DiffOp D = DiffOp::term(LaurentLambda(1), 0, 1);
  DiffOp S = DiffOp::term(LaurentLambda(1), 1, 0);
  for (int j = 1; j <= 6; ++j) {
    DiffOp lhs = euler_operator(euler_form(staircase(j)));
    DiffOp rhs = DiffOp::term(LaurentLambda(1), 0, 0);
    for (int k = 0; k < j; ++k) rhs = rhs * D * S;
    EXPECT_EQ(lhs, rhs) << j;
  }
}

TEST(ODE, EulerPolynomialsHaveRationalRoots) {
  for (const char* name : {"e2", "e3", "e61", "quintic1", "e2_mu"}) {
    auto g = build_operator(spec(name));
    for (const ABRational* p : {&g.P_dh, &g.P_d}) {
      QPoly e = euler_form(*p);
      int total = 0;
      for (const auto& [root, m] : rational_roots(e)) total += m;
      EXPECT_EQ(total, e.degree()) << name;
      EXPECT_EQ(e.degree(), p->ab_degree());
      EXPECT_TRUE(e.is_monic());
    }
  }
}

TEST(ODE, LeadingCoefficientAndSingularValues) {
  for (const char* name : {"e2", "e3", "e61", "quintic1", "quintic4", "e2_mu"}) {
    auto g = build_operator(spec(name));
    DiffOp op = to_differential_operator(g);
    int n = static_cast<int>(g.d + g.h);
    EXPECT_EQ(op.order(), n) << name;
    LPoly expected = LPoly::monomial(LaurentLambda(1), n) - LPoly::monomial(g.c_lambda_r(), static_cast<int>(g.d));
    EXPECT_EQ(op.leading(), expected) << name;
    auto sv = singular_values(g);
    EXPECT_EQ(sv.h, g.h);
    EXPECT_EQ(sv.rhs, LaurentLambda::monomial(g.c, static_cast<int>(g.r)));
  }
}

TEST(ODE, SmallPlaneExample) {
  auto g = build_operator(spec("e2"));
  DiffOp op = to_differential_operator(g);
  EXPECT_EQ(op.order(), 6);
  EXPECT_EQ(op.leading(), LPoly::monomial(LaurentLambda(1), 6) +
                              LPoly::monomial(LaurentLambda::monomial(q(1, 432), 6), 5));
  auto sv = singular_values(g);
  EXPECT_EQ(sv.h, 1);
  EXPECT_EQ(sv.rhs, LaurentLambda::monomial(q(-1, 432), 6));
}

TEST(ODE, QuinticFamilySharesEulerPolynomials) {
  auto first = build_operator(spec("quintic1"));
  for (int i = 2; i <= 8; ++i) {
    auto g = build_operator(spec("quintic" + std::to_string(i)));
    EXPECT_EQ(euler_form(g.P_dh), euler_form(first.P_dh)) << i;
    EXPECT_EQ(euler_form(g.P_d), euler_form(first.P_d)) << i;
  }
}
