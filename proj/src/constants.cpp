#include "hslab/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hslab/error.hpp"

namespace hslab {

Dimension::Dimension(int n) : n_(n) {
  if (n < 3) throw DomainError("dimension must be >= 3, got " + std::to_string(n));
}

SigmaExponent::SigmaExponent(double sigma) : sigma_(sigma) {
  if (!(sigma >= 0.0 && sigma <= 2.0))
    throw DomainError("sigma must lie in [0, 2], got " + std::to_string(sigma));
}

namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
// Relative error below 1e-15 for Re(x) >= 0.5.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,      57.156235665862923517,
    -59.597960355475491248,      14.136097974741747174,
    -0.49191381609762019978,     .33994649984811888699e-4,
    .46523628927048575665e-4,    -.98374475304879564677e-4,
    .15808870322491248884e-3,    -.21026444172410488319e-3,
    .21743961811521264320e-3,    -.16431810653676389022e-3,
    .84418223983852743293e-4,    -.26190838401581408670e-4,
    .36899182659531622704e-5};

double lanczos_log_gamma(double x) {
  const double z = x - 1.0;
  double sum = kLanczosCoeff[0];
  for (std::size_t k = 1; k < kLanczosCoeff.size(); ++k) sum += kLanczosCoeff[k] / (z + double(k));
  const double t = z + kLanczosG + 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), sin(pi x) > 0 on (0, 1/2)
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

double sphere_area(int n) {
  if (n < 1) throw DomainError("sphere_area requires n >= 1, got " + std::to_string(n));
  const double h = 0.5 * (n + 1);
  return 2.0 * std::exp(h * std::log(std::numbers::pi) - log_gamma(h));
}

double critical_exponent(SigmaExponent sigma, Dimension n) {
  return 2.0 * (n.value() - sigma.value()) / (n.value() - 2);
}

double hardy_constant(Dimension n) {
  const double c = 0.5 * (n.value() - 2);
  return c * c;
}

double sobolev_constant(Dimension n) {
  const int N = n.value();
  return 0.25 * N * (N - 2) * std::pow(sphere_area(N), 2.0 / N);
}

double hardy_sobolev_constant(Dimension n, SigmaExponent sigma) {
  const double s = sigma.value();
  if (s >= 2.0) throw DomainError("hardy_sobolev_constant needs sigma < 2; use hardy_constant at sigma = 2");
  const double N = n.value();
  const double q = (N - s) / (2.0 - s);
  const double log_bracket = std::log(sphere_area(n.value() - 1) / (2.0 - s)) + 2.0 * log_gamma(q) -
                             log_gamma(2.0 * q);
  return (N - 2.0) * (N - s) * std::exp(log_bracket / q);
}

}  // namespace hslab
