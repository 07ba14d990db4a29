#pragma once

#include <cstdint>
#include <vector>

#include "hslab/manifold.hpp"

namespace hslab {

struct ExpansionEntry {
  double n = 0.0;
  double energy = 0.0;       ///< int |grad u_n|^2 - lambda int u_n^2
  double denominator = 0.0;  ///< (int r^{-sigma} |u_n|^{2*})^{2/2*}
  double quotient = 0.0;
  double quad_error = 0.0;   ///< relative quadrature error estimate of the quotient
};

struct ExpansionSeries {
  int dimension = 0;
  double lambda = 0.0;
  double sigma = 0.0;
  double cutoff = 0.0;
  std::vector<ExpansionEntry> entries;
};

/// Q(n) for the concentrating test functions u_n = eta(r) n^{(N-2)/2} w(n r),
/// each integral by adaptive Gauss-Kronrod with breakpoints at 1/n, 10/n and
/// the cutoff. cutoff <= 0 selects r_max / 2. Throws NumericalError when a
/// quadrature misses its tolerance.
ExpansionSeries quotient_series(const ModelManifold& m, double lambda, double sigma, const std::vector<double>& n_list,
                                double cutoff = 0.0, double rel_tol = 1e-12);

/// (S_g + 6 lambda) / (6N) * int |x|^2 |grad w|^2 / D_inf with D_inf the limit
/// denominator. For N = 4 the divergent moment is replaced by its slope in
/// log R, giving the coefficient of log n / n^2.
double theory_coefficient(const ModelManifold& m, double lambda, double sigma);

/// Exact 1/n^2 coefficient of S - Q(n) from the second-order expansion of
/// both numerator and denominator:
///   [kappa (1 - 2/2*) A + (lambda + (2/2*) S_g / 6) B] / D_inf,
/// kappa = S_g / (6N), A = int |x|^2 |grad w|^2, B = int w^2. For N = 4 the
/// log n / n^2 coefficient, which coincides with theory_coefficient.
double asymptotic_coefficient(const ModelManifold& m, double lambda, double sigma);

enum class ExpansionModel { InverseSquare, LogCorrected };

/// Q(n) = c0 - c1 / n^2 (N >= 5) or c0 - c1 log n / n^2 - c2 / n^2 (N = 4).
struct ExpansionFit {
  ExpansionModel model = ExpansionModel::InverseSquare;
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double rms_residual = 0.0;
};

ExpansionFit fit_expansion(const ExpansionSeries& series, int dimension);

/// Monte Carlo over the ball of radius r0 in R^3 of x1 x2 |grad w|^2 and
/// x1^2 |grad w|^2, with the radial moment int |x|^2 |grad w|^2 by quadrature.
struct MomentSymmetry {
  double off_diagonal = 0.0;
  double off_diagonal_se = 0.0;
  double diagonal = 0.0;
  double diagonal_se = 0.0;
  double radial_third = 0.0;  ///< one third of the radial moment
  std::size_t samples = 0;
};

MomentSymmetry moment_symmetry_check(double sigma = 1.0, double r0 = 1.0, std::size_t samples = 100000,
                                     std::uint64_t seed = 20240607);

}  // namespace hslab
