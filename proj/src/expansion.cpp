#include "hslab/expansion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "hslab/bubble.hpp"
#include "hslab/constants.hpp"
#include "hslab/error.hpp"
#include "hslab/quadrature.hpp"

namespace hslab {

namespace {

double h(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double dh(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }

struct Cutoff {
  double rc;
  double value(double r) const {
    const double a = h(2.0 - r / rc), b = h(r / rc - 1.0);
    return a / (a + b);
  }
  double derivative(double r) const {
    const double a = h(2.0 - r / rc), b = h(r / rc - 1.0);
    const double da = -dh(2.0 - r / rc) / rc, db = dh(r / rc - 1.0) / rc;
    return (da * b - a * db) / ((a + b) * (a + b));
  }
};

struct Coefficients {
  double sg, lambda, p, d_inf;
  BubbleMoments moments;
};

Coefficients coefficients(const ModelManifold& m, double lambda, double sigma) {
  if (!(sigma > 0.0 && sigma < 2.0)) throw DomainError("expansion requires 0 < sigma < 2");
  const Dimension n = m.dimension();
  if (n.value() < 4) throw DomainError("expansion coefficients require N >= 4");
  if (lambda > 0.0) throw DomainError("expansion coefficients require lambda <= 0");
  const SigmaExponent s(sigma);
  Coefficients c{scalar_curvature_at_pole(m), lambda, critical_exponent(s, n), 0.0, bubble_moments(n, s)};
  c.d_inf = std::pow(c.moments.hs_mass.value, 2.0 / c.p);
  return c;
}

}  // namespace

ExpansionSeries quotient_series(const ModelManifold& m, double lambda, double sigma, const std::vector<double>& n_list,
                                double cutoff, double rel_tol) {
  const Dimension dim = m.dimension();
  const SigmaExponent s(sigma);
  if (!(sigma > 0.0 && sigma < 2.0)) throw DomainError("quotient_series requires 0 < sigma < 2");
  if (n_list.empty()) throw DomainError("quotient_series needs at least one n");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (!(n_list[i] >= 2.0)) throw DomainError("quotient_series requires n >= 2");
    if (i > 0 && !(n_list[i] > n_list[i - 1])) throw DomainError("quotient_series requires increasing n");
  }
  const double rc = cutoff > 0.0 ? cutoff : 0.5 * m.r_max();
  if (2.0 * rc > m.r_max() * (1.0 + 1e-12)) throw DomainError("cutoff exceeds the manifold");

  const int N = dim.value();
  const double p = critical_exponent(s, dim);
  const double omega = sphere_area(N - 1);
  const Cutoff eta{rc};

  ExpansionSeries series;
  series.dimension = N;
  series.lambda = lambda;
  series.sigma = sigma;
  series.cutoff = rc;
  series.entries.resize(n_list.size());
  std::vector<int> failed(n_list.size(), 0);

  const long count = static_cast<long>(n_list.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    const double n = n_list[k];
    const double amp = std::pow(n, 0.5 * (N - 2));
    auto u = [&](double r) { return eta.value(r) * amp * bubble_value(n * r, dim, s); };
    auto du = [&](double r) {
      return eta.derivative(r) * amp * bubble_value(n * r, dim, s) + eta.value(r) * amp * n * bubble_grad(n * r, dim, s);
    };
    auto vol = [&](double r) { return std::pow(m.warp(r), N - 1); };

    std::vector<double> cuts{0.0};
    for (double c : {1.0 / n, 10.0 / n, rc, 2.0 * rc})
      if (c > cuts.back() && c <= 2.0 * rc) cuts.push_back(c);
    const quad::Tolerance tol{0.0, rel_tol, 20000};
    const quad::Result grad2 = quad::integrate([&](double r) { const double g = du(r); return g * g * vol(r); }, cuts, tol);
    const quad::Result mass2 = quad::integrate([&](double r) { const double v = u(r); return v * v * vol(r); }, cuts, tol);
    // r^{-sigma} psi^{N-1} = r^{N-1-sigma} (psi/r)^{N-1}
    const quad::Result hs = quad::integrate(
        [&](double r) {
          return std::pow(r, N - 1 - sigma) * std::pow(m.warp_ratio(r), N - 1) * std::pow(std::abs(u(r)), p);
        },
        cuts, tol);
    if (!(grad2.converged && mass2.converged && hs.converged)) {
      failed[k] = 1;
      continue;
    }
    ExpansionEntry& e = series.entries[k];
    e.n = n;
    e.energy = omega * (grad2.value - lambda * mass2.value);
    e.denominator = std::pow(omega * hs.value, 2.0 / p);
    e.quotient = e.energy / e.denominator;
    e.quad_error = (grad2.abs_error + std::abs(lambda) * mass2.abs_error) / std::abs(grad2.value - lambda * mass2.value) +
                   (2.0 / p) * hs.abs_error / hs.value;
  }
  if (std::find(failed.begin(), failed.end(), 1) != failed.end())
    throw NumericalError("expansion quadrature did not converge; refine the tolerance budget");
  return series;
}

double theory_coefficient(const ModelManifold& m, double lambda, double sigma) {
  const Coefficients c = coefficients(m, lambda, sigma);
  const int N = m.dimension().value();
  const MomentEntry& a = c.moments.r2_dirichlet;
  const double moment = a.finite ? a.value : a.log_slope;
  return (c.sg + 6.0 * lambda) / (6.0 * N) * moment / c.d_inf;
}

double asymptotic_coefficient(const ModelManifold& m, double lambda, double sigma) {
  const Coefficients c = coefficients(m, lambda, sigma);
  const int N = m.dimension().value();
  const MomentEntry& a = c.moments.r2_dirichlet;
  const MomentEntry& b = c.moments.mass2;
  const double kappa = c.sg / (6.0 * N);
  const double av = a.finite ? a.value : a.log_slope;
  const double bv = b.finite ? b.value : b.log_slope;
  return (kappa * (1.0 - 2.0 / c.p) * av + (lambda + (2.0 / c.p) * c.sg / 6.0) * bv) / c.d_inf;
}

ExpansionFit fit_expansion(const ExpansionSeries& series, int dimension) {
  if (dimension < 4) throw DomainError("expansion fit requires N >= 4");
  const std::size_t rows = series.entries.size();
  if (rows < 4) throw DomainError("expansion fit needs at least 4 entries");
  ExpansionFit fit;
  fit.model = dimension == 4 ? ExpansionModel::LogCorrected : ExpansionModel::InverseSquare;
  const int cols = dimension == 4 ? 3 : 2;

  Eigen::MatrixXd x(rows, cols);
  Eigen::VectorXd y(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double n = series.entries[i].n;
    x(i, 0) = 1.0;
    if (cols == 2) {
      x(i, 1) = -1.0 / (n * n);
    } else {
      x(i, 1) = -std::log(n) / (n * n);
      x(i, 2) = -1.0 / (n * n);
    }
    y(i) = series.entries[i].quotient;
  }
  // Column scaling keeps the rank decision independent of the size of 1/n^2.
  Eigen::VectorXd scale = x.colwise().norm().transpose();
  for (int j = 0; j < cols; ++j)
    if (scale(j) == 0.0) throw DomainError("expansion fit design is rank deficient");
  Eigen::MatrixXd xs = x * scale.cwiseInverse().asDiagonal();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
  qr.setThreshold(1e-10);
  if (qr.rank() < cols) throw DomainError("expansion fit design is rank deficient");
  const Eigen::VectorXd coef = qr.solve(y).cwiseQuotient(scale);
  fit.c0 = coef(0);
  fit.c1 = coef(1);
  fit.c2 = cols == 3 ? coef(2) : 0.0;
  fit.rms_residual = std::sqrt((x * coef - y).squaredNorm() / double(rows));
  return fit;
}

MomentSymmetry moment_symmetry_check(double sigma, double r0, std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw DomainError("moment check needs at least two samples");
  if (!(r0 > 0.0)) throw DomainError("moment check radius must be positive");
  const Dimension dim(3);
  const SigmaExponent s(sigma);
  const double volume = 4.0 / 3.0 * std::numbers::pi * r0 * r0 * r0;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cube(-r0, r0);
  double sum_off = 0.0, sq_off = 0.0, sum_diag = 0.0, sq_diag = 0.0;
  std::size_t taken = 0;
  while (taken < samples) {
    const std::array<double, 3> x{cube(rng), cube(rng), cube(rng)};
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (r > r0 || r == 0.0) continue;
    const double g = bubble_grad(r, dim, s);
    const double off = volume * x[0] * x[1] * g * g;
    const double diag = volume * x[0] * x[0] * g * g;
    sum_off += off;
    sq_off += off * off;
    sum_diag += diag;
    sq_diag += diag * diag;
    ++taken;
  }
  const double n = double(samples);
  MomentSymmetry out;
  out.samples = samples;
  out.off_diagonal = sum_off / n;
  out.diagonal = sum_diag / n;
  out.off_diagonal_se = std::sqrt(std::max(0.0, sq_off / n - out.off_diagonal * out.off_diagonal) / (n - 1.0));
  out.diagonal_se = std::sqrt(std::max(0.0, sq_diag / n - out.diagonal * out.diagonal) / (n - 1.0));

  const quad::Result radial = quad::integrate(
      [&](double r) {
        const double g = bubble_grad(r, dim, s);
        return r * r * g * g * r * r;
      },
      0.0, r0, {0.0, 1e-12, 4000});
  out.radial_third = 4.0 * std::numbers::pi * radial.value / 3.0;
  return out;
}

}  // namespace hslab
