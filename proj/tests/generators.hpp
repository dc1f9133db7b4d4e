#pragma once

// Random inputs shared by the factorization tests and the acceptance suite.

#include <algorithm>
#include <random>
#include <vector>

#include "gmop/gmop.hpp"

namespace gmop::testing {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rational(num(rng)) / Rational(den(rng));
}

/// a^k + sum_{j >= 1} c_j b^j a^{k-j}: homogeneous of degree k, monic in a.
inline ABRational random_homogeneous(std::mt19937_64& rng, int k) {
  ABRational x = ABRational::gen_a().pow(k);
  for (int j = 1; j <= k; ++j) x += ABRational::term(small_rational(rng), j, k - j);
  return x;
}

/// A monic element with the given class mod b and random higher b-terms.
inline ABRational random_lift(std::mt19937_64& rng, const QPoly& cls, int max_b) {
  ABRational x = ABRational::from_a_poly(cls);
  std::bernoulli_distribution keep(0.5);
  for (int k = 1; k <= max_b; ++k)
    for (int i = 0; i < cls.degree(); ++i)
      if (keep(rng)) x += ABRational::term(small_rational(rng), k, i);
  return x;
}

/// Pairwise coprime monic pieces: powers of linear factors with distinct
/// roots, sometimes with one irreducible quadratic x^2 + m.
inline std::vector<QPoly> random_pieces(std::mt19937_64& rng, int count) {
  const QPoly x = QPoly::x();
  std::vector<QPoly> pieces;
  std::vector<Rational> roots;
  std::uniform_int_distribution<int> mult(1, 3), m(1, 5);
  std::bernoulli_distribution quad(0.3);
  if (quad(rng)) {
    pieces.push_back(x * x + QPoly::constant(Rational(m(rng))));
    --count;
  }
  while (count > 0) {
    Rational r = small_rational(rng);
    if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
    roots.push_back(r);
    pieces.push_back((x - QPoly::constant(r)).pow(mult(rng)));
    --count;
  }
  return pieces;
}

inline QPoly product(const std::vector<QPoly>& ps) {
  QPoly p = QPoly::constant(Rational(1));
  for (const auto& f : ps) p = p * f;
  return p;
}

/// P = P_{d+h} + rho.b^q.P_{d-q} with random homogeneous monic parts.
struct SplitCase {
  ABRational p, low;
  Rational rho;
  int d = 0, h = 0, q = 0;
};

inline SplitCase random_split_case(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dd(1, 5), hh(1, 3);
  SplitCase c;
  c.d = dd(rng);
  c.h = hh(rng);
  c.q = static_cast<int>(rng() % static_cast<unsigned>(c.d));
  while (c.rho.is_zero()) c.rho = small_rational(rng);
  ABRational top = random_homogeneous(rng, c.d + c.h);
  c.low = random_homogeneous(rng, c.d - c.q);
  c.p = top + ABRational::gen_b().pow(c.q) * c.low.scaled(c.rho);
  return c;
}

/// Reconstruction plus the degree and valuation bounds of the split:
/// Z of a-degree q+h and valuation >= q+1, Q of a-degree <= d-q-1 and
/// valuation >= d-q+1.
inline bool split_contracts_hold(const SplitCase& c, const IrregularSplit& sp, int n) {
  if (sp.q != c.q || sp.d != c.d || sp.h != c.h || sp.rho != c.rho || sp.regular_initial != c.low) return false;
  if (!(sp.left * sp.right).equals_mod_b(c.p, n)) return false;
  const ABRational Z = sp.Z(), Q = sp.Q();
  if (Z.a_degree() != c.q + c.h) return false;
  if (!Z.is_zero() && Z.ab_valuation() < c.q + 1) return false;
  if (!Q.is_zero() && (Q.a_degree() > c.d - c.q - 1 || Q.ab_valuation() < c.d - c.q + 1)) return false;
  return sp.right.is_monic_in_a();
}

/// Product reconstructs p mod b^n and each factor has the requested class.
inline bool factorization_holds(const ABRational& p, const FactorizationResult& res, const std::vector<QPoly>& pieces,
                                int n) {
  if (res.factors.size() != pieces.size() || !res.product().equals_mod_b(p, n)) return false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& f = res.factors[i];
    if (!(f.mod_b_class == pieces[i]) || !(f.factor.mod_b() == pieces[i]) || !f.factor.is_monic_in_a() ||
        f.rank != pieces[i].degree())
      return false;
  }
  return true;
}

}  // namespace gmop::testing
