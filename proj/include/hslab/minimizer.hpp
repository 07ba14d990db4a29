#pragma once

#include <string>
#include <vector>

#include "hslab/forms.hpp"

namespace hslab {

struct InitialProfile {
  std::string tag;  ///< "constant" or "bubble(n)"
  Profile u;
};

struct MinimizeParams {
  int max_iters = 2000;
  double grad_tol = 1e-8;  ///< on |g|_{P^-1} / (2 |u|_P), the relative energy-norm distance to stationarity
  double armijo = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 40;
};

struct InitOutcome {
  std::string tag;
  double initial_quotient = 0.0;
  double mu = 0.0;
  int iterations = 0;
  bool converged = false;
  bool stalled = false;  ///< converged by roundoff stagnation, grad_norm <= sqrt(grad_tol)
};

struct MinimizationResult {
  double mu_upper = 0.0;
  Profile profile;  ///< hs_functional(profile) = 1
  int iterations = 0;
  double grad_norm = 0.0;
  std::string init_tag;
  double concentration = 0.0;
  bool converged = false;
  bool stalled = false;
  std::vector<double> energy_history;  ///< quotient after each accepted step, best init
  std::vector<InitOutcome> inits;
};

/// eta(r) n^{(N-2)/2} w(n r) on the grid, with a smooth cutoff eta = 1 on
/// [0, cutoff] and 0 beyond 2 cutoff. cutoff <= 0 selects r_max / 2.
Profile bubble_init(const QuadraticForms& forms, double n, double cutoff = 0.0);

/// Constant profile; on a Dirichlet grid the boundary node stays at zero.
Profile constant_init(const QuadraticForms& forms);

/// Constant plus bubbles n = 2, 8, 32.
std::vector<InitialProfile> default_inits(const QuadraticForms& forms);

/// Minimizes (u^T K u - lambda u^T Mass u) / hs_functional(u)^{2/2*} over
/// profiles on the grid by preconditioned projected gradient descent on
/// {hs_functional = 1}. Returns the best result over the inits.
MinimizationResult minimize_quotient(const QuadraticForms& forms, double lambda,
                                     const std::vector<InitialProfile>& inits, const MinimizeParams& params = {});

MinimizationResult minimize_quotient(const QuadraticForms& forms, double lambda, const MinimizeParams& params = {});

}  // namespace hslab
