#pragma once

// Factorization of univariate polynomials over the rationals.
//
// Squarefree decomposition (Yun) followed by Zassenhaus on each squarefree
// part: factor modulo a small prime (distinct-degree + Cantor-Zassenhaus
// equal-degree splitting), lift p-adically, then recombine by trial division
// over the integers. Desk-scale degrees (<= 20) are the target.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gmop/unipoly.hpp"

namespace gmop {

namespace detail {

// ---------------------------------------------------------------------------
// Dense polynomials over Z/pZ, p < 2^31, lowest degree first.

using ModPoly = std::vector<std::uint64_t>;

inline void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t mp_powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mp_inv(std::uint64_t a, std::uint64_t p) { return mp_powmod(a, p - 2, p); }

inline ModPoly mp_sub(ModPoly a, const ModPoly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  mp_trim(a);
  return a;
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(r);
  return r;
}

inline std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, std::uint64_t p) {
  mp_trim(a);
  if (a.size() < b.size()) return {{}, a};
  ModPoly q(a.size() - b.size() + 1, 0);
  std::uint64_t inv = mp_inv(b.back(), p);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    std::uint64_t t = a[k] * inv % p;
    q[k - (b.size() - 1)] = t;
    if (t)
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t idx = k - (b.size() - 1) + j;
        a[idx] = (a[idx] + p - t * b[j] % p) % p;
      }
    if (k == 0) break;
  }
  a.resize(b.size() - 1);
  mp_trim(a);
  mp_trim(q);
  return {q, a};
}

inline ModPoly mp_mod(const ModPoly& a, const ModPoly& b, std::uint64_t p) { return mp_divmod(a, b, p).second; }

inline ModPoly mp_monic(ModPoly a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = mp_inv(a.back(), p);
  for (auto& v : a) v = v * inv % p;
  return a;
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  mp_trim(a);
  mp_trim(b);
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

inline ModPoly mp_derivative(const ModPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  mp_trim(r);
  return r;
}

/// base^e mod f for a big exponent.
inline ModPoly mp_powmod_poly(const ModPoly& base, const BigInt& e, const ModPoly& f, std::uint64_t p) {
  ModPoly r{1};
  ModPoly b = mp_mod(base, f, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mp_mod(mp_mul(r, r, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_mod(mp_mul(r, b, p), f, p);
  }
  return r;
}

/// Distinct-degree factorization of a monic squarefree f: (product, degree) pairs.
inline std::vector<std::pair<ModPoly, int>> mp_ddf(ModPoly f, std::uint64_t p) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly x{0, 1};
  ModPoly h = x;
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = mp_powmod_poly(h, BigInt(static_cast<unsigned long>(p)), f, p);
    ModPoly g = mp_gcd(f, mp_sub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = mp_divmod(f, g, p).first;
      h = mp_mod(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus, odd p).
inline void mp_edf(const ModPoly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  BigInt pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  BigInt e = (pd - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& v : a) v = dist(rng);
    mp_trim(a);
    if (a.size() < 2) continue;
    ModPoly t = mp_powmod_poly(a, e, f, p);
    ModPoly g = mp_gcd(f, mp_sub(t, ModPoly{1}, p), p);
    if (g.size() > 1 && g.size() < f.size()) {
      mp_edf(g, d, p, rng, out);
      mp_edf(mp_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

inline std::vector<std::uint64_t> small_primes() {
  std::vector<std::uint64_t> ps;
  const std::uint64_t limit = 20000;
  std::vector<bool> sieve(limit, true);
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (!sieve[i]) continue;
    if (i > 100) ps.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) sieve[j] = false;
  }
  return ps;
}

// ---------------------------------------------------------------------------
// Integer polynomials (BigInt coefficients, lowest degree first).

using ZPoly = std::vector<BigInt>;

inline void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v = mod_pos(v, m);
  zp_trim(r);
  return r;
}

/// Division by a monic divisor modulo m.
inline std::pair<ZPoly, ZPoly> zp_divmod_monic(ZPoly a, const ZPoly& b, const BigInt& m) {
  for (auto& v : a) v = mod_pos(v, m);
  zp_trim(a);
  if (a.size() < b.size()) return {{}, a};
  ZPoly q(a.size() - b.size() + 1, BigInt(0));
  for (std::size_t k = a.size(); k-- >= b.size();) {
    BigInt t = a[k];
    q[k - (b.size() - 1)] = t;
    if (t != 0)
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t idx = k - (b.size() - 1) + j;
        a[idx] = mod_pos(a[idx] - t * b[j], m);
      }
    if (k == 0) break;
  }
  a.resize(b.size() - 1);
  zp_trim(a);
  zp_trim(q);
  return {q, a};
}

inline ZPoly to_zp(const ModPoly& a) {
  ZPoly r;
  for (auto v : a) r.emplace_back(static_cast<unsigned long>(v));
  return r;
}

inline ModPoly to_mp(const ZPoly& a, std::uint64_t p) {
  ModPoly r;
  BigInt pp(static_cast<unsigned long>(p));
  for (const auto& v : a) r.push_back(mod_pos(v, pp).get_ui());
  mp_trim(r);
  return r;
}

/// Extended gcd mod p for coprime monic u, v: returns (s, t) with s u + t v = 1.
inline std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& u, const ModPoly& v, std::uint64_t p) {
  ModPoly r0 = u, r1 = v, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  std::uint64_t inv = mp_inv(r0.back(), p);
  for (auto& x : s0) x = x * inv % p;
  for (auto& x : t0) x = x * inv % p;
  return {s0, t0};
}

/// Lifts a monic factorization g = u v (mod p) of a monic g (mod p^k) to mod p^k.
inline std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& g, const ModPoly& u0, const ModPoly& v0,
                                                std::uint64_t p, int k) {
  auto [s, t] = mp_bezout(u0, v0, p);
  ZPoly u = to_zp(u0), v = to_zp(v0);
  BigInt pp(static_cast<unsigned long>(p));
  BigInt pm = pp;  // current modulus p^m
  BigInt pk;
  mpz_pow_ui(pk.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(k));
  for (int m = 1; m < k; ++m) {
    BigInt next = pm * pp;
    ZPoly uv = zp_mul_mod(u, v, next);
    ZPoly e(std::max(g.size(), uv.size()), BigInt(0));
    for (std::size_t i = 0; i < e.size(); ++i) {
      BigInt gi = i < g.size() ? mod_pos(g[i], next) : BigInt(0);
      BigInt ui = i < uv.size() ? uv[i] : BigInt(0);
      e[i] = mod_pos(gi - ui, next) / pm;
    }
    ModPoly em = to_mp(e, p);
    ModPoly du = mp_mod(mp_mul(em, t, p), u0, p);
    ModPoly dv = mp_mod(mp_mul(em, s, p), v0, p);
    ZPoly duz = to_zp(du), dvz = to_zp(dv);
    if (u.size() < duz.size()) u.resize(duz.size(), BigInt(0));
    if (v.size() < dvz.size()) v.resize(dvz.size(), BigInt(0));
    for (std::size_t i = 0; i < duz.size(); ++i) u[i] = mod_pos(u[i] + pm * duz[i], next);
    for (std::size_t i = 0; i < dvz.size(); ++i) v[i] = mod_pos(v[i] + pm * dvz[i], next);
    pm = next;
  }
  (void)pk;
  return {u, v};
}

inline BigInt zp_content(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& v : a) g = gcd(g, v);
  return g;
}

/// Primitive integer polynomial with positive leading coefficient, proportional to q.
inline ZPoly primitive_integer(const QPoly& q) {
  BigInt l = 1;
  for (const auto& c : q.coeffs()) l = lcm(l, c.den());
  ZPoly z;
  for (const auto& c : q.coeffs()) z.push_back(c.num() * (l / c.den()));
  BigInt g = zp_content(z);
  if (z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

inline QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& v : z) c.emplace_back(v);
  return QPoly(std::move(c));
}

/// Irreducible factors over Q of a squarefree polynomial with nonzero constant
/// term, all returned monic.
inline std::vector<QPoly> zassenhaus(const QPoly& f) {
  if (f.degree() <= 1) return {make_monic(f)};
  ZPoly g = primitive_integer(f);
  const int n = static_cast<int>(g.size()) - 1;
  const BigInt lc = g.back();

  static const std::vector<std::uint64_t> primes = small_primes();
  std::uint64_t best_p = 0;
  std::size_t best_count = 0;
  int good = 0;
  for (std::uint64_t p : primes) {
    BigInt pp(static_cast<unsigned long>(p));
    if (mod_pos(lc, pp) == 0) continue;
    ModPoly gm = mp_monic(to_mp(g, p), p);
    if (mp_gcd(gm, mp_derivative(gm, p), p).size() != 1) continue;
    std::size_t count = 0;
    for (const auto& [part, d] : mp_ddf(gm, p)) count += (part.size() - 1) / static_cast<std::size_t>(d);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1 || ++good >= 6) break;
  }
  if (best_count <= 1) return {make_monic(f)};

  const std::uint64_t p = best_p;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  ModPoly gm = mp_monic(to_mp(g, p), p);
  std::vector<ModPoly> modular;
  for (const auto& [part, d] : mp_ddf(gm, p)) mp_edf(part, d, p, rng, modular);

  // Mignotte-style bound on coefficients of lc * (any factor).
  BigInt maxc = 0;
  for (const auto& v : g) maxc = std::max(maxc, BigInt(::abs(v)));
  BigInt bound = BigInt(1) << static_cast<unsigned long>(n);
  bound *= maxc * BigInt(n + 1) * ::abs(lc) * 2;
  BigInt pp(static_cast<unsigned long>(p));
  BigInt pk = pp;
  int k = 1;
  while (pk <= bound) {
    pk *= pp;
    ++k;
  }

  // Monic image of g modulo p^k.
  BigInt lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly gmon;
  for (const auto& v : g) gmon.push_back(mod_pos(v * lc_inv, pk));

  std::vector<ZPoly> lifted;
  ZPoly rest = gmon;
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    ModPoly others{1};
    for (std::size_t j = i + 1; j < modular.size(); ++j) others = mp_mul(others, modular[j], p);
    auto [u, v] = hensel_lift_pair(rest, modular[i], others, p, k);
    lifted.push_back(u);
    rest = v;
  }
  lifted.push_back(rest);

  auto symmetric = [&](ZPoly a) {
    BigInt half = pk / 2;
    for (auto& v : a) {
      v = mod_pos(v, pk);
      if (v > half) v -= pk;
    }
    zp_trim(a);
    return a;
  };

  std::vector<QPoly> factors;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly current = g;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      BigInt clc = current.back();
      ZPoly h{mod_pos(clc, pk)};
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (pick[i]) h = zp_mul_mod(h, lifted[remaining[i]], pk);
      h = symmetric(h);
      QPoly hq = to_qpoly(h);
      auto [quot, rem] = divmod(to_qpoly(current), hq);
      if (!rem.is_zero()) continue;
      // Must divide over Z after removing content.
      ZPoly hp = primitive_integer(hq);
      auto [q2, r2] = divmod(to_qpoly(current), to_qpoly(hp));
      bool integral = r2.is_zero();
      for (const auto& c : q2.coeffs()) integral = integral && c.is_integer();
      if (!integral) continue;
      factors.push_back(make_monic(to_qpoly(hp)));
      current = primitive_integer(q2);
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (!pick[i]) keep.push_back(remaining[i]);
      remaining = std::move(keep);
      found = true;
      break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++size;
  }
  if (current.size() > 1) factors.push_back(make_monic(to_qpoly(current)));
  return factors;
}

/// Rational roots of a squarefree polynomial with nonzero constant term. Roots
/// mod p are Newton-lifted past the size of any lc * root and then confirmed
/// exactly, which avoids lifting the full factorization.
inline std::vector<Rational> squarefree_rational_roots(const QPoly& f) {
  ZPoly g = primitive_integer(f);
  const BigInt lc = g.back();
  static const std::vector<std::uint64_t> primes = small_primes();
  std::uint64_t p = 0;
  ModPoly gm;
  for (std::uint64_t cand : primes) {
    if (mod_pos(lc, BigInt(static_cast<unsigned long>(cand))) == 0) continue;
    gm = mp_monic(to_mp(g, cand), cand);
    if (mp_gcd(gm, mp_derivative(gm, cand), cand).size() == 1) {
      p = cand;
      break;
    }
  }
  if (p == 0) throw std::runtime_error("no suitable prime for root finding");

  ModPoly xp = mp_powmod_poly(ModPoly{0, 1}, BigInt(static_cast<unsigned long>(p)), gm, p);
  ModPoly split = mp_gcd(gm, mp_sub(xp, ModPoly{0, 1}, p), p);
  if (split.size() < 2) return {};
  std::vector<ModPoly> linear;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  mp_edf(split, 1, p, rng, linear);

  // Any root u/v has v | lc and |u| <= |g(0)|, so |lc * root| <= |lc * g(0)|.
  BigInt bound = 2 * ::abs(lc) * ::abs(g.front()) + 1;
  ZPoly dg;
  for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * BigInt(static_cast<unsigned long>(i)));
  auto eval = [](const ZPoly& a, const BigInt& x, const BigInt& m) {
    BigInt acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = mod_pos(acc * x + a[i], m);
    return acc;
  };

  std::vector<Rational> roots;
  for (const auto& lf : linear) {
    BigInt m(static_cast<unsigned long>(p));
    BigInt r(static_cast<unsigned long>((p - lf[0]) % p));
    while (m <= bound) {
      m *= m;
      BigInt inv, d = eval(dg, r, m);
      mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
      r = mod_pos(r - eval(g, r, m) * inv, m);
    }
    BigInt s = mod_pos(lc * r, m);
    if (s > m / 2) s -= m;
    Rational cand(s, lc);
    if (f.evaluate(cand).is_zero()) roots.push_back(cand);
  }
  return roots;
}

inline bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

}  // namespace detail

/// Yun's squarefree decomposition of a nonzero polynomial: monic s_i with
/// p = lc * prod s_i^i, returned as (s_i, i) for nonconstant s_i.
inline std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  QPoly f = make_monic(p);
  QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = exact_quotient(f, a);
  QPoly c = exact_quotient(fp, a) * Rational(1);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly s = gcd(b, d);
    if (s.degree() > 0) out.emplace_back(s, i);
    b = exact_quotient(b, s);
    c = exact_quotient(d, s);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Complete factorization into monic irreducibles over Q with multiplicities,
/// sorted by degree then coefficients.
inline std::vector<std::pair<QPoly, int>> factor_over_q(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  for (const auto& [s, mult] : squarefree_decomposition(p)) {
    QPoly rest = s;
    if (rest[0].is_zero()) {
      out.emplace_back(QPoly::x(), mult);
      rest = exact_quotient(rest, QPoly::x());
    }
    if (rest.degree() <= 0) continue;
    for (auto& f : detail::zassenhaus(rest)) out.emplace_back(std::move(f), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return detail::poly_less(x.first, y.first); });
  return out;
}

/// All rational roots with multiplicities, in increasing order.
inline std::vector<std::pair<Rational, int>> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  if (p.degree() <= 0) return roots;
  for (const auto& [s, mult] : squarefree_decomposition(p)) {
    QPoly rest = s;
    if (rest[0].is_zero()) {
      roots.emplace_back(Rational(0), mult);
      rest = exact_quotient(rest, QPoly::x());
    }
    if (rest.degree() <= 0) continue;
    for (const auto& r : detail::squarefree_rational_roots(rest)) roots.emplace_back(r, mult);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return roots;
}

/// Splits a monic polynomial into pairwise-coprime monic pieces, each a power of
/// a distinct irreducible. Nonlinear pieces come first (by degree), then the
/// linear ones by increasing root.
inline std::vector<QPoly> coprime_split(const QPoly& p) {
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "coprime_split expects a monic polynomial");
  std::vector<std::pair<QPoly, int>> fs = factor_over_q(p);
  std::stable_sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) {
    bool lx = x.first.degree() == 1, ly = y.first.degree() == 1;
    if (lx != ly) return !lx;
    if (lx) return -x.first[0] < -y.first[0];
    return detail::poly_less(x.first, y.first);
  });
  std::vector<QPoly> pieces;
  for (const auto& [f, m] : fs) pieces.push_back(f.pow(m));
  return pieces;
}

/// Cofactors (s, t) with s*u + t*v = 1, deg s < deg v, deg t < deg u.
inline std::pair<QPoly, QPoly> bezout(const QPoly& u, const QPoly& v) {
  QPoly r0 = u, r1 = v;
  QPoly s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw Error(ErrorKind::NotCoprime, "bezout: gcd is " + make_monic(r0).str());
  Rational inv = r0[0].inverse();
  s0 = s0 * inv;
  t0 = t0 * inv;
  // Reduce to the minimal-degree pair.
  if (v.degree() > 0 && s0.degree() >= v.degree()) {
    auto [q, r] = divmod(s0, v);
    s0 = r;
    t0 = t0 + q * u;
  }
  return {s0, t0};
}

}  // namespace gmop
