// gmop: command-line front end.
//
// Exit codes: 0 success, 2 rejected input (bad flags, malformed or
// quasi-homogeneous spec, ...), 1 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmop/gmop.hpp"

namespace fs = std::filesystem;
using namespace gmop;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

template <class T>
std::string join(const std::vector<T>& v, const std::string& open = "(", const std::string& close = ")") {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << close;
  return os.str();
}

std::string chain_str(const HomogChain& c) {
  if (c.factors.empty()) return "1";
  std::string s;
  for (const auto& [eta, theta] : c.factors) s += "(" + ABRational::linear(eta, theta).str() + ")";
  return s;
}

std::string complex_str(cplx z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

Rational parse_lambda(const std::string& text) {
  Rational l = Rational::parse(text);
  if (l.is_zero()) throw Error(ErrorKind::InvalidLambda, "lambda must be nonzero");
  return l;
}

struct Options {
  std::string spec_path;
  std::string batch_dir;
  std::string format = "text";
  std::vector<int> mu;
  std::string lambda = "1";
  int prec = 16;
  bool verify = false;
  bool expand = false;
  double tol = 1e-9;
  int starts = 200;
  std::uint64_t seed = 20240611;
};

using Handler = std::function<std::string(const PolySpec&, const Options&)>;

std::string cmd_analyze(const PolySpec& spec, const Options& o) {
  if (!check_condition_C(spec))
    throw Error(ErrorKind::QuasiHomogeneous, "f is quasi-homogeneous (the extended exponent matrix has rank < n+2)");
  RelationData rd = analyze(spec);
  if (o.format == "json") return json(rd).dump(2) + "\n";
  std::ostringstream os;
  if (!spec.name.empty()) os << "spec: " << spec.name << "\n";
  os << "d=" << rd.d << " h=" << rd.h << " r=" << rd.r << "\n";
  os << "c=" << rd.c << "\n";
  os << "rho = " << join(rd.rho) << "\n";
  os << "|r| = " << rd.r_abs << ", p = " << join(rd.p) << "\n";
  os << "H = " << join(rd.H, "{", "}") << ", J+ = " << join(rd.J_plus, "{", "}") << ", J- = " << join(rd.J_minus, "{", "}")
     << "\n";
  os << "Delta = " << join(rd.Delta) << "\n";
  os << "delta = " << join(rd.delta) << "\n";
  os << "eta = " << join(rd.eta) << "\n";
  return os.str();
}

std::string cmd_operator(PolySpec spec, const Options& o) {
  if (!o.mu.empty()) {
    spec.mu = o.mu;
    spec.validate();
  }
  RelationData rd = analyze(spec);
  GMOperator g = build_operator(spec, rd);
  bool agree = chain_paths_agree(spec, rd, rd.Delta) && chain_paths_agree(spec, rd, rd.delta);
  if (o.format == "json") {
    json j = g;
    j["chain_paths_agree"] = agree;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "d=" << g.d << " h=" << g.h << " r=" << g.r << " c=" << g.c << "\n";
  os << "P = P_dh - (" << g.c_lambda_r() << ")·P_d\n";
  os << "P_dh = (" << g.chain_dh.kappa.inverse() << ")·" << chain_str(g.chain_dh.chain) << "\n";
  os << "     = " << g.P_dh << "\n";
  os << "P_d = (" << g.chain_d.kappa.inverse() << ")·" << chain_str(g.chain_d.chain) << "\n";
  os << "    = " << g.P_d << "\n";
  os << "chain paths agree: " << (agree ? "yes" : "no") << "\n";
  return os.str();
}

std::string cmd_ode(const PolySpec& spec, const Options& o) {
  GMOperator g = build_operator(spec);
  DiffOp op = to_differential_operator(g);
  SingularValues sv = singular_values(g);
  QPoly e_dh = euler_form(g.P_dh), e_d = euler_form(g.P_d);
  if (o.format == "json")
    return json{{"operator", op}, {"singular_values", sv}, {"euler_dh", e_dh}, {"euler_d", e_d}}.dump(2) + "\n";
  std::ostringstream os;
  os << "D = d/ds, θ = s·D\n";
  os << "E_dh(θ) = " << e_dh.str("θ") << "\n";
  os << "E_d(θ) = " << e_d.str("θ") << "\n";
  os << "order " << op.order() << ", leading coefficient " << op.leading().str("s") << "\n";
  os << "operator: " << op.str() << "\n";
  os << "singular values: s^" << sv.h << " = " << sv.rhs << "\n";
  return os.str();
}

std::string cmd_factor(const PolySpec& spec, const Options& o) {
  GMOperator g = build_operator(spec);
  PipelineReport rep = regular_quotient_pipeline(g, parse_lambda(o.lambda), o.prec);
  if (o.format == "json") return json(rep).dump(2) + "\n";
  std::ostringstream os;
  os << "lambda = " << rep.lambda << ", truncation b^" << rep.trunc << "\n";
  os << "P mod b = " << rep.mod_b_class.str("a") << "\n";
  for (std::size_t i = 0; i < rep.blocks.factors.size(); ++i) {
    const auto& f = rep.blocks.factors[i];
    os << "block " << i + 1 << ": class " << f.mod_b_class.str("a") << ", rank " << f.rank
       << (f.regular ? ", regular" : ", not regular") << "\n";
  }
  if (rep.bernstein_element) {
    os << "eigenvalue-0 block: rank " << rep.zero_block_rank << (rep.zero_block_regular ? ", regular" : ", irregular")
       << ", q = " << rep.q << ", regular part rank " << rep.regular_rank_bound << "\n";
    os << "Bernstein element: " << *rep.bernstein_element << "\n";
    os << "Bernstein polynomial: " << rep.bernstein_poly->str() << "\n";
    os << "right-divides P_d: " << (rep.divides_P_d ? "yes" : "no") << "\n";
    if (rep.quotient) os << "P_d = (" << *rep.quotient << ")·(Bernstein element)\n";
  } else {
    os << "no eigenvalue-0 block\n";
  }
  return os.str();
}

std::string cmd_intdep(const PolySpec& spec, const Options& o) {
  RelationData rd = analyze(spec);
  DependenceRelation rel = dependence_relation(spec, rd);
  const auto names = relation_variable_names(spec.nvars);
  std::optional<bool> verified;
  if (o.verify) verified = verify_identity(spec, rel);
  if (o.format == "json") {
    json j = rel;
    if (o.expand) j["expanded"] = sparse_to_json(rel.expand());
    j["verified"] = verified ? json(*verified) : json(nullptr);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "monic of degree " << rel.degree << " in f (normalized by " << rel.normalizer << ")\n";
  os << "relation: " << rel.factored_str() << " = 0\n";
  if (o.expand) os << "expanded: " << rel.expand().str(names) << "\n";
  if (verified) os << "identity " << (*verified ? "verified" : "FAILED") << " by exact expansion\n";
  return os.str();
}

std::string cmd_verify(const PolySpec& spec, const Options& o) {
  NewtonOptions opt;
  opt.n_starts = o.starts;
  opt.seed = o.seed;
  CriticalReport rep = critical_values(spec, cplx(parse_lambda(o.lambda).to_double()), opt);
  bool ok = check_singular_equation(rep, o.tol);
  if (o.format == "json") {
    json j = rep;
    j["tol"] = o.tol;
    j["pass"] = ok;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "predicted: s^" << rep.h << " = " << complex_str(rep.rhs) << "\n";
  os << "starts " << rep.n_starts << ", converged " << rep.n_converged << ", failed " << rep.n_failed << "\n";
  os << std::left << std::setw(40) << "critical value" << std::setw(14) << "residual" << "mismatch\n";
  for (const auto& f : rep.found) {
    std::ostringstream r, m;
    r << std::setprecision(3) << f.residual;
    m << std::setprecision(3) << singular_mismatch(f.value, rep.h, rep.rhs);
    os << std::left << std::setw(40) << complex_str(f.value) << std::setw(14) << r.str() << m.str() << "\n";
  }
  os << "check at tol " << o.tol << ": " << (ok ? "pass" : "FAIL") << "\n";
  return os.str();
}

Outcome run_one(const Handler& h, const std::string& path, const Options& o) {
  Outcome res;
  try {
    res.out = h(load_spec(path), o);
  } catch (const Error& e) {
    res.code = e.is_precondition() ? 2 : 1;
    res.err = e.what();
  } catch (const std::exception& e) {
    res.code = 1;
    res.err = std::string("internal error: ") + e.what();
  }
  return res;
}

int dispatch(const Handler& h, const Options& o) {
  if (o.batch_dir.empty()) {
    if (o.spec_path.empty()) {
      std::cerr << "error: a spec file or --batch directory is required\n";
      return 2;
    }
    Outcome r = run_one(h, o.spec_path, o);
    std::cout << r.out;
    if (!r.err.empty()) std::cerr << "error: " << r.err << "\n";
    return r.code;
  }
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(o.batch_dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
  if (ec) {
    std::cerr << "error: cannot read directory '" << o.batch_dir << "': " << ec.message() << "\n";
    return 2;
  }
  std::sort(files.begin(), files.end());
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, run_one, h, f, o));
  int code = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome r = jobs[i].get();
    std::cout << "== " << files[i] << " ==\n" << r.out;
    if (!r.err.empty()) std::cout << "error: " << r.err << "\n";
    code = std::max(code, r.code == 1 ? 3 : r.code);
  }
  return code == 3 ? 1 : code;
}

int cmd_selftest() {
  int failed = 0;
  for (const auto& c : algebra_identities()) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    if (!c.pass) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " identities failed" : "all identities hold") << "\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss-Manin operators of polynomials with n+2 monomials"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_path, "polynomial spec (JSON)");
    sub->add_option("--batch", o.batch_dir, "process every .json spec in a directory");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "relation data: rho, Delta, delta, d, h, r, c");
  add_common(analyze_cmd);
  auto* operator_cmd = app.add_subcommand("operator", "the operator P = P_dh - c.lambda^r.P_d in A");
  add_common(operator_cmd);
  operator_cmd->add_option("--mu", o.mu, "exponent of the form mu = x^beta (comma separated)")->delimiter(',');
  auto* ode_cmd = app.add_subcommand("ode", "the operator as a differential equation in s");
  add_common(ode_cmd);
  auto* factor_cmd = app.add_subcommand("factor", "spectral blocks and Bernstein element at a fixed lambda");
  add_common(factor_cmd);
  factor_cmd->add_option("--lambda", o.lambda, "rational value of lambda (p/q)");
  factor_cmd->add_option("--prec", o.prec, "b-adic truncation order")->check(CLI::Range(2, 1000));
  auto* intdep_cmd = app.add_subcommand("intdep", "integral dependence relation of f over the x_i.df/dx_i");
  add_common(intdep_cmd);
  intdep_cmd->add_flag("--verify", o.verify, "check the relation by exact expansion in x");
  intdep_cmd->add_flag("--expand", o.expand, "print the relation expanded in f and u_i");
  auto* verify_cmd = app.add_subcommand("verify-critical", "numeric check of s^h = c.lambda^r at critical values");
  add_common(verify_cmd);
  verify_cmd->add_option("--lambda", o.lambda, "rational value of lambda (p/q)");
  verify_cmd->add_option("--tol", o.tol, "relative tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--starts", o.starts, "number of Newton starts")->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--seed", o.seed, "random seed");
  auto* selftest_cmd = app.add_subcommand("selftest", "run the algebra identity suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (selftest_cmd->parsed()) return cmd_selftest();
  if (analyze_cmd->parsed()) return dispatch(cmd_analyze, o);
  if (operator_cmd->parsed()) return dispatch(cmd_operator, o);
  if (ode_cmd->parsed()) return dispatch(cmd_ode, o);
  if (factor_cmd->parsed()) return dispatch(cmd_factor, o);
  if (intdep_cmd->parsed()) return dispatch(cmd_intdep, o);
  if (verify_cmd->parsed()) return dispatch(cmd_verify, o);
  return 2;
}
