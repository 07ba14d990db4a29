#include "hslab/bubble.hpp"

#include <array>
#include <cmath>

#include "hslab/error.hpp"
#include "hslab/quadrature.hpp"

namespace hslab {

namespace {

struct BubbleShape {
  double N, sigma, s, beta, p;
  BubbleShape(Dimension n, SigmaExponent sg)
      : N(n.value()), sigma(sg.value()), s(2.0 - sg.value()), beta((n.value() - 2.0) / (2.0 - sg.value())),
        p(critical_exponent(sg, n)) {}
  double value(double r) const { return std::pow(1.0 + std::pow(r, s), -beta); }
  double grad(double r) const {
    return (2.0 - N) * std::pow(r, 1.0 - sigma) * std::pow(1.0 + std::pow(r, s), -beta - 1.0);
  }
};

MomentEntry finite_moment(const quad::Integrand& f, double omega, double tol) {
  const quad::Result res = quad::integrate_half_line(f, {0.0, tol, 8000});
  if (!res.converged) throw NumericalError("bubble moment quadrature did not reach tolerance");
  return {omega * res.value, omega * res.abs_error, true, 0.0, 0.0};
}

// int_0^R for a logarithmically divergent moment, plus the slope in log R.
MomentEntry truncated_moment(const quad::Integrand& f, double omega, double tol, double radius) {
  const std::array<double, 5> cuts{0.0, 1.0, radius / 100.0, radius / 10.0, radius};
  const quad::Result inner = quad::integrate(f, std::span<const double>(cuts.data(), 4), {0.0, tol, 8000});
  const quad::Result outer = quad::integrate(f, cuts[3], cuts[4], {0.0, tol, 8000});
  MomentEntry e;
  e.value = omega * (inner.value + outer.value);
  e.abs_error = omega * (inner.abs_error + outer.abs_error);
  e.finite = false;
  e.truncation_radius = radius;
  e.log_slope = omega * outer.value / std::log(10.0);
  return e;
}

}  // namespace

double bubble_value(double r, Dimension n, SigmaExponent sigma) {
  if (r < 0.0) throw DomainError("bubble_value requires r >= 0");
  if (sigma.value() >= 2.0) throw DomainError("bubble requires sigma < 2");
  return BubbleShape(n, sigma).value(r);
}

double bubble_grad(double r, Dimension n, SigmaExponent sigma) {
  if (r < 0.0) throw DomainError("bubble_grad requires r >= 0");
  if (sigma.value() >= 2.0) throw DomainError("bubble requires sigma < 2");
  if (r == 0.0) {
    if (sigma.value() < 1.0) return 0.0;
    if (sigma.value() == 1.0) return 2.0 - n.value();
    return -INFINITY;
  }
  return BubbleShape(n, sigma).grad(r);
}

BubbleMoments BubbleMoments::normalized() const {
  const double p = 2.0 * (dimension - sigma) / (dimension - 2.0);
  // c^p hs_mass = 1
  const double c2 = std::pow(hs_mass.value, -2.0 / p);
  const double cp = 1.0 / hs_mass.value;
  BubbleMoments out = *this;
  for (MomentEntry* e : {&out.dirichlet, &out.mass2, &out.r2_dirichlet}) {
    e->value *= c2;
    e->abs_error *= c2;
    e->log_slope *= c2;
  }
  for (MomentEntry* e : {&out.hs_mass, &out.r2_hs}) {
    e->value *= cp;
    e->abs_error *= cp;
  }
  return out;
}

BubbleMoments bubble_moments(Dimension n, SigmaExponent sigma, double tol) {
  if (n.value() < 4) throw DomainError("bubble_moments requires N >= 4");
  if (!(sigma.value() > 0.0 && sigma.value() < 2.0)) throw DomainError("bubble_moments requires 0 < sigma < 2");
  if (!(tol > 0.0)) throw DomainError("bubble_moments requires tol > 0");

  const BubbleShape b(n, sigma);
  const double omega = sphere_area(n.value() - 1);
  const double rn = b.N - 1.0;

  const quad::Integrand dirichlet = [&](double r) { const double g = b.grad(r); return g * g * std::pow(r, rn); };
  const quad::Integrand mass2 = [&](double r) { const double w = b.value(r); return w * w * std::pow(r, rn); };
  const quad::Integrand hs = [&](double r) { return std::pow(b.value(r), b.p) * std::pow(r, rn - b.sigma); };
  const quad::Integrand r2_dirichlet = [&](double r) { const double g = b.grad(r); return g * g * std::pow(r, rn + 2.0); };
  const quad::Integrand r2_hs = [&](double r) { return std::pow(b.value(r), b.p) * std::pow(r, rn + 2.0 - b.sigma); };

  BubbleMoments m;
  m.dimension = n.value();
  m.sigma = sigma.value();
  m.dirichlet = finite_moment(dirichlet, omega, tol);
  m.hs_mass = finite_moment(hs, omega, tol);
  m.r2_hs = finite_moment(r2_hs, omega, tol);
  if (n.value() >= 5) {
    m.mass2 = finite_moment(mass2, omega, tol);
    m.r2_dirichlet = finite_moment(r2_dirichlet, omega, tol);
  } else {
    constexpr double radius = 1e4;
    m.mass2 = truncated_moment(mass2, omega, tol, radius);
    m.r2_dirichlet = truncated_moment(r2_dirichlet, omega, tol, radius);
  }
  return m;
}

double pohozaev_residual(Dimension n, SigmaExponent sigma, double tol) {
  if (n.value() < 5) throw DomainError("pohozaev_residual needs N >= 5; the N = 4 moments diverge");
  const BubbleMoments m = bubble_moments(n, sigma, tol).normalized();
  const double S = hardy_sobolev_constant(n, sigma);
  const double lhs = m.r2_dirichlet.value;
  const double rhs = n.value() * m.mass2.value + S * m.r2_hs.value;
  return std::abs(lhs - rhs) / std::abs(lhs);
}

double bubble_quotient(Dimension n, SigmaExponent sigma, double amplitude, double tol) {
  if (sigma.value() >= 2.0) throw DomainError("bubble_quotient requires sigma < 2");
  if (amplitude == 0.0) throw DomainError("bubble_quotient requires a nonzero amplitude");
  const BubbleShape b(n, sigma);
  const double omega = sphere_area(n.value() - 1);
  const double rn = b.N - 1.0;
  const quad::Integrand dirichlet = [&](double r) {
    const double g = amplitude * b.grad(r);
    return g * g * std::pow(r, rn);
  };
  const quad::Integrand hs = [&](double r) {
    return std::pow(std::abs(amplitude) * b.value(r), b.p) * std::pow(r, rn - b.sigma);
  };
  const MomentEntry num = finite_moment(dirichlet, omega, tol);
  const MomentEntry den = finite_moment(hs, omega, tol);
  return num.value / std::pow(den.value, 2.0 / b.p);
}

}  // namespace hslab
