#pragma once

#include <vector>

#include "hslab/manifold.hpp"

namespace hslab {

/// v_a(r) = r^{(2-N)/2} (-log r)^a on 0 < r < 1.
double log_bubble_value(double r, double a, int n);

/// Maximum over the interior nodes of a log-uniform grid on [r0 e^{-span}, r0] of
///   |L_h v_a + a(a-1) r^{-2} (log r)^{-2} v_a + lambda r^{-2} v_a| r^{(N-2)/2} |log r|^{-a},
/// L = -Laplace_g - ((N-2)/2)^2 r^{-2} - lambda r^{-2}, with the radial
/// Laplace-Beltrami operator discretized by central differences in t = log r.
/// On the flat model the continuum residual vanishes, so this is pure
/// discretization error; on curved models it stays bounded.
double operator_residual(const ModelManifold& m, double a, double lambda, double r0, int cells, double span = 6.0);

/// operator_residual on flat R^N.
double flat_operator_residual(double a, double lambda, int n, double r0, int cells, double span = 6.0);

struct ImprovedHardyResult {
  double value = 0.0;           ///< least eigenvalue of (K - c^2 W_2, W_log)
  bool outside_small_radius_scope = false;  ///< r0 > 0.1 and value < 1
};

/// Least eigenvalue of int|u'|^2 - ((N-2)/2)^2 int r^{-2}u^2 over
/// int r^{-2} (log r)^{-2} u^2 on the flat ball of radius r0 < 1, Dirichlet at r0.
ImprovedHardyResult improved_hardy_eigen(int n, double r0, int cells, double gamma = 2.0);

/// Dominant residual term -a(a-1) r^{-2}(log r)^{-2} v_a of L v_a, analytic sign
/// and the sign of the discrete L_h v_a (lambda = 0, flat) near r = 0.
struct SignLedgerEntry {
  double a = 0.0;
  double coefficient = 0.0;  ///< -a(a-1)
  int analytic_sign = 0;
  int discrete_sign = 0;
  const char* branch = "";   ///< "sub" for -1 < a < -1/2, "super" for a <= -1, "other"
};

std::vector<SignLedgerEntry> sign_ledger(const std::vector<double>& exponents, int n = 3);

/// omega int_eps^r0 |v_a'|^2 r^{N-1} dr; bounded as eps -> 0 iff a < -1/2.
double log_bubble_energy(double a, int n, double r0, double eps);

}  // namespace hslab
