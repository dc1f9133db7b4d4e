#pragma once

// Exact identities of the algebra A used by `gmop selftest` and the test
// suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gmop/ab_element.hpp"

namespace gmop {

struct IdentityCheck {
  std::string name;
  bool pass = false;
};

/// Random element sum c.b^k.a^i with i <= max_a, k <= max_b and small
/// rational coefficients.
template <class Rng>
ABRational random_element(Rng& rng, int max_a, int max_b, double density = 0.6) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::bernoulli_distribution keep(density);
  ABRational x;
  for (int k = 0; k <= max_b; ++k)
    for (int i = 0; i <= max_a; ++i)
      if (keep(rng)) x += ABRational::term(Rational(num(rng)) / Rational(den(rng)), k, i);
  return x;
}

inline std::vector<IdentityCheck> algebra_identities(std::uint64_t seed = 7) {
  std::vector<IdentityCheck> out;
  const ABRational a = ABRational::gen_a(), b = ABRational::gen_b();
  const ABRational apb = a + b;
  for (int nu = 1; nu <= 8; ++nu) {
    const std::string s = std::to_string(nu);
    const ABRational an = a.pow(nu), an1 = a.pow(nu - 1);
    out.push_back({"a^" + s + "·b = b·(a+b)^" + s, an * b == b * apb.pow(nu)});
    out.push_back({"(a+b)^" + s + " = a^" + s + " + " + s + "·a^" + std::to_string(nu - 1) + "·b",
                   apb.pow(nu) == an + (an1 * b).scaled(Rational(nu))});
    out.push_back({"a^" + s + "·b = b·a^" + s + " + " + s + "·b·a^" + std::to_string(nu - 1) + "·b",
                   an * b == b * an + (b * an1 * b).scaled(Rational(nu))});
  }
  for (int k = 1; k <= 10; ++k) {
    const ABRational bk = b.pow(k);
    out.push_back({"[a, b^" + std::to_string(k) + "] = " + std::to_string(k) + "·b^" + std::to_string(k + 1),
                   a * bk - bk * a == b.pow(k + 1).scaled(Rational(k))});
  }
  std::mt19937_64 rng(seed);
  int assoc_ok = 0;
  for (int t = 0; t < 100; ++t) {
    ABRational x = random_element(rng, 4, 4), y = random_element(rng, 4, 4), z = random_element(rng, 4, 4);
    if ((x * y) * z == x * (y * z)) ++assoc_ok;
  }
  out.push_back({"associativity on 100 random triples (" + std::to_string(assoc_ok) + "/100)", assoc_ok == 100});
  return out;
}

}  // namespace gmop
