#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hslab/eigensolver.hpp"
#include "hslab/forms.hpp"
#include "hslab/manifold.hpp"
#include "hslab/minimizer.hpp"

namespace hslab {

/// Grid family used by the threshold computations.
struct GridSpec {
  int cells = 512;
  double gamma = 2.0;
};

/// Reflected on the closed sphere, Dirichlet otherwise.
BoundaryCondition default_boundary(const ModelManifold& m);

QuadraticForms assemble_on(const ModelManifold& m, const GridSpec& g, double sigma);

struct MuSample {
  double lambda = 0.0;
  double mu = 0.0;
  double concentration = 0.0;
};

MuSample mu_of_lambda(const QuadraticForms& forms, double lambda);
MuSample mu_of_lambda(const ModelManifold& m, double lambda, const GridSpec& g = {});

/// Samples sorted by lambda; solves run concurrently.
std::vector<MuSample> mu_curve(const QuadraticForms& forms, std::vector<double> lambdas);

struct LambdaStarBracket {
  double lo = 0.0;
  double hi = 0.0;
  double detection_delta = 0.0;
  std::string grid_tag;
  int evaluations = 0;
};

struct BracketOptions {
  double lambda_min = -10.0;
  double lambda_max = 1.0;
  GridSpec grid;
};

/// Bisection in lambda on mu_h(lambda) < ((N-2)/2)^2 - detection_delta. A
/// nonpositive detection_delta selects |mu_h(M) - mu_h(2M)| measured at the
/// midpoint of a first bracket. Throws RangeError if the predicate does not
/// change sign over [lambda_min, lambda_max].
LambdaStarBracket lambda_star_bracket(const ModelManifold& m, double tol_lambda, double detection_delta = 0.0,
                                      const BracketOptions& opt = {});

/// Concentration at grid M and 2M for one lambda.
struct ConcentrationShift {
  double lambda = 0.0;
  double coarse = 0.0;
  double fine = 0.0;
  double change() const noexcept { return fine - coarse; }
};

ConcentrationShift concentration_shift(const ModelManifold& m, double lambda, const GridSpec& g = {});

enum class Verdict { ConfirmsTheorem, StrictWithoutCriterion, Inconclusive };
std::string_view to_string(Verdict v);

struct StrictInequalityReport {
  double lambda = 0.0;
  double sigma = 0.0;
  double mu_upper = 0.0;   ///< finer grid
  double mu_coarse = 0.0;
  double sobolev_hs = 0.0; ///< S_{N,sigma}
  double margin = 0.0;     ///< S - mu_upper
  double error_estimate = 0.0;
  CriterionResult criterion;
  bool in_theorem_scope = false;  ///< N >= 4 and lambda < 0
  bool converged = false;
  std::string init_tag;
  double concentration = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// Minimizes on grids M and 2M, estimates the discretization error by
/// Richardson (|mu_M - mu_2M| / 3 for a second-order method) and confirms
/// the strict inequality when the criterion holds and margin > 5 x error.
StrictInequalityReport strict_inequality_report(const ModelManifold& m, double lambda, double sigma,
                                                const GridSpec& g = {}, const MinimizeParams& params = {});

}  // namespace hslab
