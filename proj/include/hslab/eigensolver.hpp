#pragma once

#include <span>
#include <utility>

#include "hslab/forms.hpp"
#include "hslab/tridiag.hpp"

namespace hslab {

/// Number of generalized eigenvalues of (A, W) strictly below shift, from the
/// inertia of A - shift W (Sylvester). W must be positive definite. An exact
/// zero pivot is handled by nudging the shift up by a few ulps and retrying.
int inertia_count(const SymTridiag& a, const SymTridiag& w, double shift);
int inertia_count(const SymTridiag& a, std::span<const double> w_diag, double shift);

/// Gershgorin enclosure of the spectrum of (A, diag(w)).
std::pair<double, double> gershgorin_bounds(const SymTridiag& a, std::span<const double> w_diag);

struct EigenResult {
  double mu = 0.0;
  Profile profile;             ///< u^T W u = 1, nonnegative orientation
  int iterations = 0;          ///< inverse-iteration (or fallback) steps
  int bisection_steps = 0;
  double residual = 0.0;       ///< |Au - mu W u| / ((|A| + |mu| |W|) |u|)
  bool used_fallback = false;
  double inverse_residual = 0.0;  ///< residual reached by inverse iteration alone
  double concentration = 0.0;
};

struct EigenOptions {
  double bisection_tol = 1e-10;
  double residual_tol = 1e-9;
  int max_inverse_iters = 60;
  int max_fallback_iters = 400;
};

/// Least eigenpair of A u = mu W u for tridiagonal A (possibly indefinite) and
/// SPD tridiagonal W. warm_start, when nonempty, seeds the eigenvector.
EigenResult smallest_pencil_eigen(const SymTridiag& a, const SymTridiag& w, std::span<const double> warm_start = {},
                                  const EigenOptions& opt = {});

/// Discrete mu_{lambda,2}: least eigenpair of (K - lambda Mass, W_2) on the free
/// unknowns of the grid. The profile has full nodal length.
EigenResult smallest_generalized_eigen(const QuadraticForms& forms, double lambda,
                                       std::span<const double> warm_start = {}, const EigenOptions& opt = {});

}  // namespace hslab
