#pragma once

#include "hslab/constants.hpp"

namespace hslab {

/// One radial moment |S^{N-1}| * int_0^inf f(r) r^{N-1} dr of the bubble.
///
/// Divergent moments (N = 4) are reported with finite = false; value then holds
/// the integral truncated to the ball of radius truncation_radius and
/// log_slope the growth rate d value / d log R measured between R/10 and R.
struct MomentEntry {
  double value = 0.0;
  double abs_error = 0.0;
  bool finite = true;
  double truncation_radius = 0.0;
  double log_slope = 0.0;
};

/// Moments of the unnormalized bubble w(r) = (1 + r^{2-sigma})^{(2-N)/(2-sigma)}.
struct BubbleMoments {
  int dimension = 0;
  double sigma = 0.0;
  MomentEntry dirichlet;     ///< int |grad w|^2
  MomentEntry mass2;         ///< int w^2
  MomentEntry hs_mass;       ///< int |x|^{-sigma} w^{2*(sigma)}
  MomentEntry r2_dirichlet;  ///< int |x|^2 |grad w|^2
  MomentEntry r2_hs;         ///< int |x|^{2-sigma} w^{2*(sigma)}

  /// Moments of c*w with c chosen so that hs_mass == 1. For this normalization
  /// the bubble solves -Laplace w = S_{N,sigma} |x|^{-sigma} w^{2*-1}.
  BubbleMoments normalized() const;
};

double bubble_value(double r, Dimension n, SigmaExponent sigma);

/// w'(r).
double bubble_grad(double r, Dimension n, SigmaExponent sigma);

/// Requires N >= 4 and 0 < sigma < 2; tol is the relative quadrature target.
BubbleMoments bubble_moments(Dimension n, SigmaExponent sigma, double tol = 1e-10);

/// Relative residual of the Pohozaev identity
///   int |x|^2 |grad w|^2 = N int w^2 + S_{N,sigma} int |x|^{2-sigma} w^{2*}
/// for the bubble normalized to unit hs_mass. N = 4 is refused (divergent terms).
double pohozaev_residual(Dimension n, SigmaExponent sigma, double tol = 1e-12);

/// int |grad(c w)|^2 / (int |x|^{-sigma} |c w|^{2*})^{2/2*}, 0 <= sigma < 2.
double bubble_quotient(Dimension n, SigmaExponent sigma, double amplitude = 1.0, double tol = 1e-12);

}  // namespace hslab
