#include "hslab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "hslab/bubble.hpp"
#include "hslab/constants.hpp"
#include "hslab/eigensolver.hpp"
#include "hslab/error.hpp"
#include "hslab/expansion.hpp"
#include "hslab/hardy_refined.hpp"
#include "hslab/manifold.hpp"
#include "hslab/minimizer.hpp"
#include "hslab/records.hpp"
#include "hslab/thresholds.hpp"

namespace hslab::cli {

namespace {

// Provenance tags attached to record entries.
constexpr const char* kClosedForm = "closed-form";
constexpr const char* kLieb = "anchor:sharp-hardy-sobolev-constant";
constexpr const char* kHardy = "anchor:hardy-constant";
constexpr const char* kLinear = "anchor:linear-quotient";
constexpr const char* kThreshold = "anchor:lambda-star-definition";
constexpr const char* kStrict = "anchor:strict-inequality-criterion";
constexpr const char* kExpansion = "anchor:test-function-expansion";
constexpr const char* kLogHardy = "anchor:log-perturbed-ground-state";
constexpr const char* kDerived = "artifact-derived";
constexpr const char* kRadialCaveat = "radial profiles only: values for sigma < 2 are upper bounds";

struct Common {
  std::string manifold = "sphere";
  double radius = 1.0;
  int dim = 4;
  std::string rmax = "auto";
  int nodes = 512;
  double grading = 2.0;
  std::string bc = "auto";
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--manifold", c.manifold, "euclidean | sphere | hyperbolic");
  sub->add_option("--radius", c.radius, "curvature radius a");
  sub->add_option("--dim", c.dim, "dimension N");
  sub->add_option("--rmax", c.rmax, "geodesic radius of the domain (number or pi)");
  sub->add_option("--nodes", c.nodes, "grid cells M");
  sub->add_option("--grading", c.grading, "grid grading exponent");
  sub->add_option("--bc", c.bc, "dirichlet | reflected | auto");
  sub->add_option("--out", c.out, "output directory");
}

ModelManifold manifold_of(const Common& c) {
  const ManifoldKind kind = parse_manifold_kind(c.manifold);
  double rmax;
  if (c.rmax == "auto")
    rmax = kind == ManifoldKind::Sphere ? std::numbers::pi * c.radius : 1.0;
  else
    rmax = parse_length(c.rmax);
  return make_manifold(kind, c.radius, c.dim, rmax);
}

BoundaryCondition bc_of(const Common& c, const ModelManifold& m) {
  return c.bc == "auto" ? default_boundary(m) : parse_boundary_condition(c.bc);
}

QuadraticForms forms_of(const Common& c, const ModelManifold& m, double sigma) {
  return assemble_forms(build_grid(m.r_max(), c.nodes, c.grading, bc_of(c, m)), m, sigma);
}

std::filesystem::path out_of(const Common& c) { return c.out.empty() ? default_out_dir() : std::filesystem::path(c.out); }

RunRecord base_record(const std::string& command, const Common& c, const ModelManifold* m) {
  RunRecord r;
  r.command = command;
  r.timestamp = utc_timestamp();
  r.parameters["dim"] = c.dim;
  if (m != nullptr) {
    r.parameters["manifold"] = std::string(to_string(m->kind()));
    r.parameters["radius"] = m->scale();
    r.parameters["rmax"] = m->r_max();
    r.grid["cells"] = c.nodes;
    r.grid["grading"] = c.grading;
    r.grid["bc"] = std::string(to_string(bc_of(c, *m)));
  }
  return r;
}

void say(const RunRecord& r) { std::cout << r.to_json().dump() << '\n'; }

int cmd_constants(const Common& c, double sigma) {
  const Dimension n(c.dim);
  const SigmaExponent s(sigma);
  RunRecord r = base_record("constants", c, nullptr);
  r.parameters["sigma"] = sigma;
  r.put("critical_exponent", critical_exponent(s, n), kClosedForm);
  r.put("hardy_constant", hardy_constant(n), kHardy);
  r.put("sobolev_constant", sobolev_constant(n), kLieb);
  if (sigma < 2.0) r.put("hardy_sobolev_constant", hardy_sobolev_constant(n, s), kLieb);
  write_record(r, out_of(c));
  say(r);
  return kExitOk;
}

void put_moment(RunRecord& r, const std::string& key, const MomentEntry& e) {
  r.put(key, e.value, kDerived);
  r.put(key + "_finite", e.finite, kDerived);
  if (!e.finite) r.put(key + "_log_slope", e.log_slope, kDerived);
}

int cmd_bubble(const Common& c, double sigma) {
  const BubbleMoments bm = bubble_moments(Dimension(c.dim), SigmaExponent(sigma));
  RunRecord r = base_record("bubble-moments", c, nullptr);
  r.parameters["sigma"] = sigma;
  put_moment(r, "dirichlet", bm.dirichlet);
  put_moment(r, "mass2", bm.mass2);
  put_moment(r, "hs_mass", bm.hs_mass);
  put_moment(r, "r2_dirichlet", bm.r2_dirichlet);
  put_moment(r, "r2_hs", bm.r2_hs);
  if (c.dim >= 5) r.put("pohozaev_residual", pohozaev_residual(Dimension(c.dim), SigmaExponent(sigma)), kDerived);
  write_record(r, out_of(c));
  say(r);
  return kExitOk;
}

int cmd_solve(const Common& c, double sigma, double lambda) {
  if (!(sigma > 0.0 && sigma <= 2.0)) throw DomainError("solve requires 0 < sigma <= 2");
  const ModelManifold m = manifold_of(c);
  const QuadraticForms f = forms_of(c, m, sigma);
  RunRecord r = base_record("solve", c, &m);
  r.parameters["sigma"] = sigma;
  r.parameters["lambda"] = lambda;
  if (f.linear()) {
    const EigenResult e = smallest_generalized_eigen(f, lambda);
    r.put("mu", e.mu, kLinear);
    r.put("residual", e.residual, kDerived);
    r.put("iterations", e.iterations, kDerived);
    r.put("used_fallback", e.used_fallback, kDerived);
    r.put("concentration", e.concentration, kDerived);
    r.put("hardy_constant", hardy_constant(m.dimension()), kHardy);
  } else {
    const MinimizationResult mr = minimize_quotient(f, lambda);
    r.put("mu_upper", mr.mu_upper, kStrict);
    r.put("converged", mr.converged, kDerived);
    r.put("grad_norm", mr.grad_norm, kDerived);
    r.put("iterations", mr.iterations, kDerived);
    r.put("init_tag", mr.init_tag, kDerived);
    r.put("concentration", mr.concentration, kDerived);
    r.put("hardy_sobolev_constant", hardy_sobolev_constant(m.dimension(), SigmaExponent(sigma)), kLieb);
    r.put("caveat", kRadialCaveat, kDerived);
  }
  write_record(r, out_of(c));
  say(r);
  return kExitOk;
}

int cmd_mu_curve(const Common& c, double lo, double hi, int steps) {
  if (steps < 2 || !(lo < hi)) throw DomainError("mu-curve needs lambda-min < lambda-max and steps >= 2");
  const ModelManifold m = manifold_of(c);
  const QuadraticForms f = forms_of(c, m, 2.0);
  std::vector<double> lambdas(steps);
  for (int i = 0; i < steps; ++i) lambdas[i] = lo + (hi - lo) * i / (steps - 1);
  const std::vector<MuSample> curve = mu_curve(f, lambdas);
  std::vector<std::vector<double>> rows;
  bool decreasing = true;
  double mu_max = -INFINITY;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    rows.push_back({curve[i].lambda, curve[i].mu, curve[i].concentration});
    if (i > 0 && !(curve[i].mu < curve[i - 1].mu)) decreasing = false;
    mu_max = std::max(mu_max, curve[i].mu);
  }
  const auto table = write_table(out_of(c), "mu_curve", {"lambda", "mu", "concentration"}, rows);
  RunRecord r = base_record("mu-curve", c, &m);
  r.parameters["lambda_min"] = lo;
  r.parameters["lambda_max"] = hi;
  r.parameters["steps"] = steps;
  r.put("strictly_decreasing", decreasing, kThreshold);
  r.put("mu_max", mu_max, kHardy);
  r.put("hardy_constant", hardy_constant(m.dimension()), kHardy);
  r.put("table", table.string(), kDerived);
  write_record(r, out_of(c));
  say(r);
  return kExitOk;
}

int cmd_lambda_star(const Common& c, double tol, double delta, double lo, double hi) {
  const ModelManifold m = manifold_of(c);
  BracketOptions opt;
  opt.lambda_min = lo;
  opt.lambda_max = hi;
  opt.grid = {c.nodes, c.grading};
  const LambdaStarBracket b = lambda_star_bracket(m, tol, delta, opt);
  RunRecord r = base_record("lambda-star", c, &m);
  r.parameters["tol"] = tol;
  r.put("lo", b.lo, kThreshold);
  r.put("hi", b.hi, kThreshold);
  r.put("detection_delta", b.detection_delta, kDerived);
  r.put("grid_tag", b.grid_tag, kDerived);
  r.put("caveat", "hi over-estimates lambda*; detection certifies mu < cap only", kDerived);
  write_record(r, out_of(c));
  say(r);
  return kExitOk;
}

int cmd_theorem2(const Common& c, double lambda, double sigma) {
  const ModelManifold m = manifold_of(c);
  const StrictInequalityReport rep = strict_inequality_report(m, lambda, sigma, {c.nodes, c.grading});
  RunRecord r = base_record("theorem2-check", c, &m);
  r.parameters["lambda"] = lambda;
  r.parameters["sigma"] = sigma;
  r.put("mu_upper", rep.mu_upper, kStrict);
  r.put("mu_coarse", rep.mu_coarse, kDerived);
  r.put("hardy_sobolev_constant", rep.sobolev_hs, kLieb);
  r.put("margin", rep.margin, kStrict);
  r.put("error_estimate", rep.error_estimate, kDerived);
  r.put("scalar_curvature", rep.criterion.scalar_curvature, kStrict);
  r.put("criterion_holds", rep.criterion.holds, kStrict);
  r.put("in_theorem_scope", rep.in_theorem_scope, kStrict);
  r.put("converged", rep.converged, kDerived);
  r.put("verdict", std::string(to_string(rep.verdict)), kStrict);
  r.put("caveat", kRadialCaveat, kDerived);
  write_record(r, out_of(c));
  say(r);
  return rep.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw DomainError("bad list entry '" + item + "'");
  }
  return out;
}

int cmd_expansion(const Common& c, double lambda, double sigma, const std::string& ns, double cutoff) {
  const ModelManifold m = manifold_of(c);
  const ExpansionSeries s = quotient_series(m, lambda, sigma, parse_list(ns), cutoff);
  const ExpansionFit fit = fit_expansion(s, c.dim);
  std::vector<std::vector<double>> rows;
  for (const auto& e : s.entries) rows.push_back({e.n, e.energy, e.denominator, e.quotient});
  const auto table = write_table(out_of(c), "expansion_series", {"n", "energy", "denominator", "quotient"}, rows);
  RunRecord r = base_record("expansion-fit", c, &m);
  r.parameters["lambda"] = lambda;
  r.parameters["sigma"] = sigma;
  r.parameters["n"] = ns;
  r.parameters["cutoff"] = s.cutoff;
  r.put("model", fit.model == ExpansionModel::LogCorrected ? "log-corrected" : "inverse-square", kExpansion);
  r.put("c0", fit.c0, kExpansion);
  r.put("c1", fit.c1, kExpansion);
  r.put("c2", fit.c2, kExpansion);
  r.put("rms_residual", fit.rms_residual, kDerived);
  r.put("hardy_sobolev_constant", hardy_sobolev_constant(m.dimension(), SigmaExponent(sigma)), kLieb);
  r.put("theory_coefficient", theory_coefficient(m, lambda, sigma), kExpansion);
  r.put("asymptotic_coefficient", asymptotic_coefficient(m, lambda, sigma), kDerived);
  r.put("table", table.string(), kDerived);
  write_record(r, out_of(c));
  say(r);
  return kExitOk;
}

struct Check {
  std::string name;
  bool pass;
  double value;
  std::string tag;
};

std::vector<Check> refined_hardy_checks() {
  std::vector<Check> out;
  for (int n : {3, 4}) {
    const double v = improved_hardy_eigen(n, 0.1, 1024).value;
    out.push_back({"improved_hardy_N" + std::to_string(n), v >= 0.99, v, kLogHardy});
    for (double a : {-1.0, -0.5, 0.5}) {
      const double r1 = flat_operator_residual(a, 0.0, n, 0.5, 400), r2 = flat_operator_residual(a, 0.0, n, 0.5, 800);
      const double order = std::log2(r1 / r2);
      out.push_back({"flat_residual_order_N" + std::to_string(n) + "_a" + std::to_string(a), order >= 1.9, order,
                     kLogHardy});
    }
  }
  for (const auto& e : sign_ledger({-1.5, -1.0, -0.75, 0.5}))
    out.push_back({"sign_ledger_a" + std::to_string(e.a), e.analytic_sign == e.discrete_sign, e.coefficient, kLogHardy});
  return out;
}

std::vector<Check> constants_checks() {
  std::vector<Check> out;
  for (int n : {3, 4, 5, 6})
    for (double s : {0.0, 0.5, 1.0, 1.5}) {
      const double a = hardy_sobolev_constant(Dimension(n), SigmaExponent(s));
      const double b = bubble_quotient(Dimension(n), SigmaExponent(s));
      const double rel = std::abs(a - b) / a;
      out.push_back({"lieb_vs_bubble_N" + std::to_string(n) + "_s" + std::to_string(s), rel <= 1e-6, rel, kLieb});
    }
  for (int n : {5, 6}) {
    const double res = pohozaev_residual(Dimension(n), SigmaExponent(1.0));
    out.push_back({"pohozaev_N" + std::to_string(n), res <= 1e-8, res, kDerived});
  }
  return out;
}

std::vector<Check> linear_checks() {
  std::vector<Check> out;
  const ModelManifold ball = make_manifold(ManifoldKind::EuclideanBall, 1.0, 3, 1.0);
  double prev = INFINITY;
  bool monotone = true;
  for (int cells : {512, 1024, 2048}) {
    const double mu = mu_of_lambda(ball, 0.0, {cells, 2.0}).mu;
    monotone = monotone && mu <= prev && mu >= 0.25 - 1e-6;
    prev = mu;
  }
  out.push_back({"local_hardy_refinement", monotone, prev, kHardy});
  const ModelManifold s3 = make_manifold(ManifoldKind::Sphere, 1.0, 3, std::numbers::pi);
  const double mu0 = mu_of_lambda(s3, 0.0).mu;
  out.push_back({"sphere_mu_at_zero", std::abs(mu0) <= 1e-8, mu0, kThreshold});
  return out;
}

int cmd_verify(const Common& c, const std::string& suite) {
  std::vector<Check> checks;
  const bool all = suite == "all";
  if (!all && suite != "refined-hardy" && suite != "constants" && suite != "linear")
    throw DomainError("unknown suite '" + suite + "' (all, constants, linear, refined-hardy)");
  if (all || suite == "constants") {
    auto v = constants_checks();
    checks.insert(checks.end(), v.begin(), v.end());
  }
  if (all || suite == "linear") {
    auto v = linear_checks();
    checks.insert(checks.end(), v.begin(), v.end());
  }
  if (all || suite == "refined-hardy") {
    auto v = refined_hardy_checks();
    checks.insert(checks.end(), v.begin(), v.end());
  }
  bool ok = true;
  for (const Check& k : checks) {
    RunRecord r = base_record("verify", c, nullptr);
    r.parameters["suite"] = suite;
    r.parameters["invariant"] = k.name;
    r.put("pass", k.pass, k.tag);
    r.put("value", k.value, k.tag);
    write_record(r, out_of(c));
    std::cout << (k.pass ? "PASS " : "FAIL ") << k.name << " value=" << k.value << '\n';
    ok = ok && k.pass;
  }
  return ok ? kExitOk : kExitError;
}

}  // namespace

double parse_length(const std::string& text) {
  std::string t = text;
  for (char& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  const auto pos = t.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw DomainError("cannot parse length '" + text + "'");
    return v;
  }
  double factor = 1.0, divisor = 1.0;
  const std::string head = t.substr(0, pos), tail = t.substr(pos + 2);
  if (!head.empty()) factor = std::stod(head[head.size() - 1] == '*' ? head.substr(0, head.size() - 1) : head);
  if (!tail.empty()) {
    if (tail[0] != '/') throw DomainError("cannot parse length '" + text + "'");
    divisor = std::stod(tail.substr(1));
  }
  return factor * std::numbers::pi / divisor;
}

std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  std::vector<std::string> out;
  std::string line;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("config line without '=': " + line);
    out.push_back("--" + trim(line.substr(0, eq)));
    out.push_back(trim(line.substr(eq + 1)));
  }
  return out;
}

int run(const std::vector<std::string>& input) {
  // Config values go in front of the user's flags; the last occurrence wins.
  std::vector<std::string> args;
  std::vector<std::string> config;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] == "--config" && i + 1 < input.size()) {
      try {
        config = config_tokens(input[++i]);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
      }
    } else {
      args.push_back(input[i]);
    }
  }
  if (!config.empty() && args.size() >= 2) args.insert(args.begin() + 2, config.begin(), config.end());

  CLI::App app{"Hardy-Sobolev quotients on model manifolds"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--config", "key = value file; command-line flags override it");

  Common c;
  double sigma = 1.0, lambda = 0.0, lmin = -3.0, lmax = 1.0, tol = 0.05, delta = 0.0, cutoff = 0.0;
  double bracket_lo = -10.0, bracket_hi = 1.0;
  int steps = 9;
  std::string ns = "4,8,16,32,64", suite = "all";

  auto* constants = app.add_subcommand("constants", "sharp constants for (N, sigma)");
  auto* bubble = app.add_subcommand("bubble-moments", "bubble moments by quadrature");
  auto* solve = app.add_subcommand("solve", "discrete mu for one lambda");
  auto* curve = app.add_subcommand("mu-curve", "mu(lambda) sweep for sigma = 2");
  auto* star = app.add_subcommand("lambda-star", "bracket for the threshold lambda*");
  auto* thm = app.add_subcommand("theorem2-check", "strict inequality mu < S_{N,sigma}");
  auto* expn = app.add_subcommand("expansion-fit", "concentrating test-function series and fit");
  auto* verify = app.add_subcommand("verify", "aggregated invariant checks");
  for (auto* sub : {constants, bubble, solve, curve, star, thm, expn, verify}) add_common(sub, c);

  for (auto* sub : {constants, bubble, solve, thm, expn}) sub->add_option("--sigma", sigma, "singularity exponent");
  for (auto* sub : {solve, thm, expn}) sub->add_option("--lambda", lambda, "lambda");
  curve->add_option("--lambda-min", lmin);
  curve->add_option("--lambda-max", lmax);
  curve->add_option("--steps", steps);
  star->add_option("--tol", tol, "bracket width");
  star->add_option("--delta", delta, "detection threshold; 0 measures it from a refinement");
  star->add_option("--lambda-min", bracket_lo);
  star->add_option("--lambda-max", bracket_hi);
  expn->add_option("--n", ns, "comma-separated n values");
  expn->add_option("--cutoff", cutoff, "cutoff radius; 0 selects rmax/2");
  verify->add_option("--suite", suite, "all | constants | linear | refined-hardy");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitError;
  }

  try {
    if (*constants) return cmd_constants(c, sigma);
    if (*bubble) return cmd_bubble(c, sigma);
    if (*solve) return cmd_solve(c, sigma, lambda);
    if (*curve) return cmd_mu_curve(c, lmin, lmax, steps);
    if (*star) return cmd_lambda_star(c, tol, delta, bracket_lo, bracket_hi);
    if (*thm) return cmd_theorem2(c, lambda, sigma);
    if (*expn) return cmd_expansion(c, lambda, sigma, ns, cutoff);
    if (*verify) return cmd_verify(c, suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc)); }

}  // namespace hslab::cli
