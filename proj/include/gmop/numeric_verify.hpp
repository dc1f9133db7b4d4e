#pragma once

// Floating-point check that the nonzero critical values s of f satisfy
// s^h = c.lambda^r. Critical points are found by damped complex Newton
// iteration on grad f = 0 from random starts.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "gmop/gm_engine.hpp"

namespace gmop {

using cplx = std::complex<double>;

struct CriticalValue {
  cplx value;
  double residual = 0;  // scaled gradient norm at the critical point
  std::vector<cplx> point;

  friend bool operator==(const CriticalValue&, const CriticalValue&) = default;
};

struct CriticalReport {
  cplx lambda;
  long h = 0;
  cplx rhs;  // c.lambda^r
  std::vector<CriticalValue> found;  // distinct nonzero critical values, sorted
  std::vector<cplx> predicted;       // the h roots of s^h = c.lambda^r
  double max_mismatch = 0;           // max |s^h - rhs| / max(1, |s|^h) over found
  int n_starts = 0;
  int n_converged = 0;
  int n_failed = 0;  // starts without convergence

  friend bool operator==(const CriticalReport&, const CriticalReport&) = default;
};

struct NewtonOptions {
  int n_starts = 200;
  int max_iter = 200;
  double grad_tol = 1e-12;   // stop criterion on the scaled gradient
  double accept_tol = 1e-9;  // scaled residual required to keep a point
  double zero_value = 1e-8;  // critical values below this are treated as 0
  std::uint64_t seed = 20240611;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

class GradientSystem {
 public:
  GradientSystem(const PolySpec& spec, cplx lambda) : nv_(static_cast<std::size_t>(spec.nvars)) {
    for (std::size_t j = 0; j < spec.n_monomials(); ++j) {
      exps_.push_back(spec.column(j));
      coeffs_.push_back(j + 1 == spec.n_monomials() ? lambda : cplx(1));
    }
  }

  std::size_t nvars() const { return nv_; }

  cplx value(const std::vector<cplx>& x) const {
    cplx s = 0;
    for (std::size_t j = 0; j < exps_.size(); ++j) s += coeffs_[j] * mono(x, exps_[j], -1, -1);
    return s;
  }

  /// Gradient, Hessian and a scale for each gradient component (sum of the
  /// absolute values of its terms).
  void derivatives(const std::vector<cplx>& x, Eigen::VectorXcd& g, Eigen::MatrixXcd& hess,
                   std::vector<double>& scale) const {
    g.setZero(static_cast<Eigen::Index>(nv_));
    hess.setZero(static_cast<Eigen::Index>(nv_), static_cast<Eigen::Index>(nv_));
    scale.assign(nv_, 0.0);
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      const auto& e = exps_[j];
      for (std::size_t i = 0; i < nv_; ++i) {
        if (!e[i]) continue;
        cplx t = coeffs_[j] * double(e[i]) * mono(x, e, static_cast<int>(i), -1);
        g(static_cast<Eigen::Index>(i)) += t;
        scale[i] += std::abs(t);
        for (std::size_t k = 0; k < nv_; ++k) {
          int ek = e[k] - (k == i ? 1 : 0);
          if (ek <= 0) continue;
          hess(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) +=
              coeffs_[j] * double(e[i]) * double(ek) * mono(x, e, static_cast<int>(i), static_cast<int>(k));
        }
      }
    }
  }

  double scaled_residual(const std::vector<cplx>& x) const {
    Eigen::VectorXcd g;
    Eigen::MatrixXcd hs;
    std::vector<double> sc;
    derivatives(x, g, hs, sc);
    return scaled_norm(g, sc);
  }

  static double scaled_norm(const Eigen::VectorXcd& g, const std::vector<double>& scale) {
    double r = 0;
    for (Eigen::Index i = 0; i < g.size(); ++i)
      r = std::max(r, std::abs(g(i)) / std::max(1.0, scale[static_cast<std::size_t>(i)]));
    return r;
  }

 private:
  // x^e with the exponents of variables d1, d2 lowered by one each.
  cplx mono(const std::vector<cplx>& x, const std::vector<int>& e, int d1, int d2) const {
    cplx m = 1;
    for (std::size_t i = 0; i < nv_; ++i) {
      int k = e[i] - (static_cast<int>(i) == d1) - (static_cast<int>(i) == d2);
      for (int t = 0; t < k; ++t) m *= x[i];
    }
    return m;
  }

  std::size_t nv_;
  std::vector<std::vector<int>> exps_;
  std::vector<cplx> coeffs_;
};

/// Damped Newton from x; returns true when the scaled gradient drops below tol.
inline bool newton(const GradientSystem& sys, std::vector<cplx>& x, const NewtonOptions& opt) {
  const auto n = static_cast<Eigen::Index>(sys.nvars());
  Eigen::VectorXcd g;
  Eigen::MatrixXcd hess;
  std::vector<double> scale;
  for (int it = 0; it < opt.max_iter; ++it) {
    sys.derivatives(x, g, hess, scale);
    double res = GradientSystem::scaled_norm(g, scale);
    if (res < opt.grad_tol) return true;
    Eigen::VectorXcd step = hess.fullPivLu().solve(-g);
    if (!step.allFinite()) return false;
    double t = 1.0;
    const double gnorm = g.norm();
    std::vector<cplx> trial(x.size());
    for (int back = 0; back < 30; ++back) {
      for (Eigen::Index i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + t * step(i);
      Eigen::VectorXcd g2;
      Eigen::MatrixXcd h2;
      std::vector<double> s2;
      sys.derivatives(trial, g2, h2, s2);
      if (g2.allFinite() && g2.norm() < (1.0 - 1e-4 * t) * gnorm) break;
      t *= 0.5;
    }
    x = trial;
  }
  return sys.scaled_residual(x) < opt.accept_tol;
}

inline std::vector<cplx> roots_of(long h, cplx rhs) {
  std::vector<cplx> out;
  const double mod = std::pow(std::abs(rhs), 1.0 / static_cast<double>(h));
  const double arg = std::arg(rhs);
  for (long k = 0; k < h; ++k)
    out.push_back(std::polar(mod, (arg + 2.0 * M_PI * static_cast<double>(k)) / static_cast<double>(h)));
  return out;
}

}  // namespace detail

inline double singular_mismatch(cplx s, long h, cplx rhs) {
  cplx sh = std::pow(s, static_cast<int>(h));
  return std::abs(sh - rhs) / std::max(1.0, std::abs(sh));
}

inline CriticalReport critical_values(const PolySpec& spec, const RelationData& rd, cplx lambda,
                                      const NewtonOptions& opt = {}) {
  if (lambda == cplx(0)) throw Error(ErrorKind::InvalidLambda, "lambda must be nonzero");
  const detail::GradientSystem sys(spec, lambda);
  CriticalReport rep;
  rep.lambda = lambda;
  rep.h = rd.h;
  rep.rhs = rd.c.to_double() * std::pow(lambda, static_cast<int>(rd.r));
  rep.predicted = detail::roots_of(rd.h, rep.rhs);
  rep.n_starts = opt.n_starts;

  // Critical points of size rho give values of size about rho^deg, so the
  // starts are spread around |rhs|^(1/(h.deg)).
  int min_deg = 1 << 30;
  for (std::size_t j = 0; j < spec.n_monomials(); ++j) {
    int s = 0;
    for (int e : spec.column(j)) s += e;
    min_deg = std::min(min_deg, s);
  }
  const double value_scale = std::pow(std::max(std::abs(rep.rhs), 1e-300), 1.0 / static_cast<double>(rd.h));
  const double radius = std::pow(std::max(value_scale, 1e-12), 1.0 / std::max(1, min_deg));

  std::vector<std::vector<cplx>> points(static_cast<std::size_t>(opt.n_starts));
  std::vector<char> ok(static_cast<std::size_t>(opt.n_starts), 0);
  auto run = [&](int begin, int end) {
    for (int s = begin; s < end; ++s) {
      std::mt19937_64 rng(opt.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(s + 1));
      std::uniform_real_distribution<double> logr(std::log(1e-2), std::log(1e2));
      std::uniform_real_distribution<double> phase(0, 2 * M_PI);
      std::vector<cplx> x(sys.nvars());
      for (auto& xi : x) xi = std::polar(radius * std::exp(logr(rng)), phase(rng));
      if (detail::newton(sys, x, opt)) {
        points[static_cast<std::size_t>(s)] = x;
        ok[static_cast<std::size_t>(s)] = 1;
      }
    }
  };
  unsigned nt = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, static_cast<unsigned>(std::max(1, opt.n_starts)));
  std::vector<std::thread> pool;
  const int chunk = (opt.n_starts + static_cast<int>(nt) - 1) / static_cast<int>(nt);
  for (unsigned t = 0; t < nt; ++t) {
    int b = static_cast<int>(t) * chunk;
    int e = std::min(opt.n_starts, b + chunk);
    if (b < e) pool.emplace_back(run, b, e);
  }
  for (auto& th : pool) th.join();

  for (int s = 0; s < opt.n_starts; ++s) {
    if (!ok[static_cast<std::size_t>(s)]) {
      ++rep.n_failed;
      continue;
    }
    ++rep.n_converged;
    const auto& x = points[static_cast<std::size_t>(s)];
    cplx v = sys.value(x);
    if (std::abs(v) < opt.zero_value) continue;
    bool dup = false;
    for (const auto& f : rep.found)
      if (std::abs(f.value - v) < 1e-8 * std::max(1.0, std::abs(v))) dup = true;
    if (!dup) rep.found.push_back({v, sys.scaled_residual(x), x});
  }
  std::sort(rep.found.begin(), rep.found.end(), [](const CriticalValue& a, const CriticalValue& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  for (const auto& f : rep.found) rep.max_mismatch = std::max(rep.max_mismatch, singular_mismatch(f.value, rep.h, rep.rhs));
  return rep;
}

inline CriticalReport critical_values(const PolySpec& spec, cplx lambda, const NewtonOptions& opt = {}) {
  return critical_values(spec, analyze(spec), lambda, opt);
}

/// Every nonzero critical value found satisfies |s^h - c.lambda^r| < tol.max(1, |s|^h).
inline bool check_singular_equation(const CriticalReport& rep, double tol) {
  return std::all_of(rep.found.begin(), rep.found.end(),
                     [&](const CriticalValue& f) { return singular_mismatch(f.value, rep.h, rep.rhs) < tol; });
}

inline bool check_singular_equation(const PolySpec& spec, cplx lambda, double tol, const NewtonOptions& opt = {}) {
  return check_singular_equation(critical_values(spec, lambda, opt), tol);
}

}  // namespace gmop
