#include "hslab/thresholds.hpp"

#include <algorithm>
#include <cmath>

#include "hslab/constants.hpp"
#include "hslab/error.hpp"

namespace hslab {

BoundaryCondition default_boundary(const ModelManifold& m) {
  return m.is_closed() ? BoundaryCondition::Reflected : BoundaryCondition::Dirichlet;
}

QuadraticForms assemble_on(const ModelManifold& m, const GridSpec& g, double sigma) {
  return assemble_forms(build_grid(m.r_max(), g.cells, g.gamma, default_boundary(m)), m, sigma);
}

MuSample mu_of_lambda(const QuadraticForms& forms, double lambda) {
  const EigenResult e = smallest_generalized_eigen(forms, lambda);
  return {lambda, e.mu, e.concentration};
}

MuSample mu_of_lambda(const ModelManifold& m, double lambda, const GridSpec& g) {
  return mu_of_lambda(assemble_on(m, g, 2.0), lambda);
}

std::vector<MuSample> mu_curve(const QuadraticForms& forms, std::vector<double> lambdas) {
  std::sort(lambdas.begin(), lambdas.end());
  std::vector<MuSample> out(lambdas.size());
  const long count = static_cast<long>(lambdas.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) out[k] = mu_of_lambda(forms, lambdas[k]);
  return out;
}

namespace {

LambdaStarBracket bisect(const QuadraticForms& forms, double cap, double delta, double tol, const BracketOptions& opt) {
  LambdaStarBracket b;
  b.detection_delta = delta;
  auto detected = [&](double lambda) {
    ++b.evaluations;
    return smallest_generalized_eigen(forms, lambda).mu < cap - delta;
  };
  double lo = opt.lambda_min, hi = opt.lambda_max;
  const bool at_lo = detected(lo), at_hi = detected(hi);
  if (at_lo == at_hi)
    throw RangeError("lambda-star predicate is constant on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "]; widen the lambda range");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (detected(mid))
      hi = mid;
    else
      lo = mid;
  }
  b.lo = lo;
  b.hi = hi;
  return b;
}

}  // namespace

LambdaStarBracket lambda_star_bracket(const ModelManifold& m, double tol_lambda, double detection_delta,
                                      const BracketOptions& opt) {
  if (!(tol_lambda > 0.0)) throw DomainError("lambda-star tolerance must be positive");
  if (!(opt.lambda_min < opt.lambda_max)) throw DomainError("lambda-star range is empty");
  const double cap = hardy_constant(m.dimension());
  const QuadraticForms coarse = assemble_on(m, opt.grid, 2.0);
  LambdaStarBracket b;
  if (detection_delta > 0.0) {
    b = bisect(coarse, cap, detection_delta, tol_lambda, opt);
  } else {
    // first pass locates the crossing; the refinement gap there sets delta
    const LambdaStarBracket first = bisect(coarse, cap, 1e-6, tol_lambda, opt);
    const double mid = 0.5 * (first.lo + first.hi);
    const QuadraticForms fine = assemble_on(m, {2 * opt.grid.cells, opt.grid.gamma}, 2.0);
    const double gap = std::abs(smallest_generalized_eigen(coarse, mid).mu - smallest_generalized_eigen(fine, mid).mu);
    b = bisect(coarse, cap, std::max(gap, 1e-6), tol_lambda, opt);
    b.evaluations += first.evaluations + 2;
  }
  b.grid_tag = "M=" + std::to_string(opt.grid.cells) + ",gamma=" + std::to_string(opt.grid.gamma) + "," +
               std::string(to_string(default_boundary(m)));
  return b;
}

ConcentrationShift concentration_shift(const ModelManifold& m, double lambda, const GridSpec& g) {
  ConcentrationShift s;
  s.lambda = lambda;
  s.coarse = mu_of_lambda(m, lambda, g).concentration;
  s.fine = mu_of_lambda(m, lambda, {2 * g.cells, g.gamma}).concentration;
  return s;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ConfirmsTheorem: return "CONFIRMS_THEOREM";
    case Verdict::StrictWithoutCriterion: return "STRICT_WITHOUT_CRITERION";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

StrictInequalityReport strict_inequality_report(const ModelManifold& m, double lambda, double sigma,
                                                const GridSpec& g, const MinimizeParams& params) {
  const SigmaExponent s(sigma);
  if (!(sigma > 0.0 && sigma < 2.0)) throw DomainError("strict inequality check requires 0 < sigma < 2");
  StrictInequalityReport r;
  r.lambda = lambda;
  r.sigma = sigma;
  r.sobolev_hs = hardy_sobolev_constant(m.dimension(), s);
  r.criterion = curvature_criterion(m, lambda);
  r.in_theorem_scope = r.criterion.in_theorem_regime;

  const MinimizationResult coarse = minimize_quotient(assemble_on(m, g, sigma), lambda, params);
  const MinimizationResult fine = minimize_quotient(assemble_on(m, {2 * g.cells, g.gamma}, sigma), lambda, params);
  r.mu_coarse = coarse.mu_upper;
  r.mu_upper = fine.mu_upper;
  r.converged = coarse.converged && fine.converged;
  r.init_tag = fine.init_tag;
  r.concentration = fine.concentration;
  r.error_estimate = std::abs(coarse.mu_upper - fine.mu_upper) / 3.0;
  r.margin = r.sobolev_hs - r.mu_upper;

  const bool strict = r.margin > 5.0 * r.error_estimate;
  if (strict && r.criterion.holds)
    r.verdict = Verdict::ConfirmsTheorem;
  else if (strict)
    r.verdict = Verdict::StrictWithoutCriterion;
  else
    r.verdict = Verdict::Inconclusive;
  return r;
}

}  // namespace hslab
