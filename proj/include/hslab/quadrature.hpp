#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace hslab::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, 1 <= n <= 64. Computed once per n and cached.
const GaussRule& gauss_legendre(int n);

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

struct Tolerance {
  double abs = 0.0;
  double rel = 1e-10;
  int max_intervals = 4000;
};

/// Globally adaptive Gauss-Kronrod (7/15) on a finite interval. Endpoint
/// singularities of integrable power type are handled by repeated bisection.
Result integrate(const Integrand& f, double a, double b, Tolerance tol = {});

/// Same, with the interval pre-split at the given interior breakpoints.
Result integrate(const Integrand& f, std::span<const double> breakpoints, Tolerance tol = {});

/// Integral over [0, inf). [0, 1] is integrated directly and [1, inf) through
/// r = 1/t, i.e. f(1/t)/t^2 on (0, 1]; power-law tails become endpoint
/// behaviour at t = 0.
Result integrate_half_line(const Integrand& f, Tolerance tol = {});

}  // namespace hslab::quad
