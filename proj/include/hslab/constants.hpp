#pragma once

namespace hslab {

/// Ambient dimension N >= 3.
class Dimension {
 public:
  explicit Dimension(int n);
  int value() const noexcept { return n_; }
  operator int() const noexcept { return n_; }

 private:
  int n_;
};

/// Hardy-Sobolev weight exponent, 0 <= sigma <= 2.
class SigmaExponent {
 public:
  explicit SigmaExponent(double sigma);
  double value() const noexcept { return sigma_; }
  operator double() const noexcept { return sigma_; }

 private:
  double sigma_;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Surface measure |S^n| of the unit n-sphere in R^{n+1}.
double sphere_area(int n);

/// 2*(sigma) = 2(N - sigma)/(N - 2).
double critical_exponent(SigmaExponent sigma, Dimension n);

/// ((N-2)/2)^2, the sharp Hardy constant.
double hardy_constant(Dimension n);

/// Sharp Sobolev constant N(N-2)/4 |S^N|^{2/N}.
double sobolev_constant(Dimension n);

/// Lieb's sharp Hardy-Sobolev constant for 0 <= sigma < 2:
///
///   S = (N-2)(N-s) [ |S^{N-1}|/(2-s) * G((N-s)/(2-s))^2 / G(2(N-s)/(2-s)) ]^{(2-s)/(N-s)}
///
/// The bracket is evaluated in log space. At sigma = 0 this reduces to
/// sobolev_constant(N); as sigma -> 2 it tends to hardy_constant(N).
/// sigma = 2 itself is rejected: call hardy_constant.
double hardy_sobolev_constant(Dimension n, SigmaExponent sigma);

}  // namespace hslab
