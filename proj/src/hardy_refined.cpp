#include "hslab/hardy_refined.hpp"

#include <algorithm>
#include <cmath>

#include "hslab/eigensolver.hpp"
#include "hslab/error.hpp"
#include "hslab/forms.hpp"
#include "hslab/kernels.hpp"
#include "hslab/quadrature.hpp"

namespace hslab {

double log_bubble_value(double r, double a, int n) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("log bubble needs 0 < r < 1");
  return std::pow(r, 0.5 * (2 - n)) * std::pow(-std::log(r), a);
}

namespace {

// L_h v at node i of the log grid (t = log r), lambda included.
double discrete_l(const ModelManifold& m, const std::vector<double>& t, const std::vector<double>& v, std::size_t i,
                  double h, double lambda) {
  const int N = m.dimension().value();
  const double c2 = 0.25 * (N - 2) * (N - 2);
  const double r = std::exp(t[i]);
  const double vtt = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
  const double vt = (v[i + 1] - v[i - 1]) / (2.0 * h);
  // u_rr + (N-1) psi'/psi u_r in the log variable
  const double lap = (vtt - vt + (N - 1) * r * m.warp_derivative(r) / m.warp(r) * vt) / (r * r);
  return -lap - (c2 + lambda) * v[i] / (r * r);
}

}  // namespace

double operator_residual(const ModelManifold& m, double a, double lambda, double r0, int cells, double span) {
  if (!(r0 > 0.0 && r0 < 1.0)) throw DomainError("residual radius must satisfy 0 < r0 < 1");
  if (r0 > m.r_max()) throw DomainError("residual radius exceeds the manifold");
  if (cells < 4) throw DomainError("residual grid needs at least 4 cells");
  if (!(span > 0.0)) throw DomainError("residual span must be positive");
  const int N = m.dimension().value();
  const double t1 = std::log(r0), t0 = t1 - span, h = span / cells;
  std::vector<double> t(cells + 1), v(cells + 1);
  for (int i = 0; i <= cells; ++i) {
    t[i] = t0 + i * h;
    v[i] = log_bubble_value(std::exp(t[i]), a, N);
  }
  double worst = 0.0;
  for (int i = 1; i < cells; ++i) {
    const double r = std::exp(t[i]), lr = std::log(r);
    const double expected = -a * (a - 1.0) * v[i] / (r * r * lr * lr) - lambda * v[i] / (r * r);
    const double res = discrete_l(m, t, v, i, h, lambda) - expected;
    worst = std::max(worst, std::abs(res) * std::pow(r, 0.5 * (N - 2)) * std::pow(std::abs(lr), -a));
  }
  return worst;
}

double flat_operator_residual(double a, double lambda, int n, double r0, int cells, double span) {
  if (!(r0 > 0.0 && r0 < 1.0)) throw DomainError("residual radius must satisfy 0 < r0 < 1");
  return operator_residual(make_manifold(ManifoldKind::EuclideanBall, 1.0, n, 1.0), a, lambda, r0, cells, span);
}

ImprovedHardyResult improved_hardy_eigen(int n, double r0, int cells, double gamma) {
  if (!(r0 > 0.0 && r0 < 1.0)) throw DomainError("improved Hardy radius must satisfy 0 < r0 < 1");
  const ModelManifold m = make_manifold(ManifoldKind::EuclideanBall, 1.0, n, r0);
  const QuadraticForms forms = assemble_forms(build_grid(r0, cells, gamma, BoundaryCondition::Dirichlet), m, 2.0);
  const double c2 = 0.25 * (n - 2) * (n - 2);
  const double omega = forms.omega;
  const kernels::Weight log_w = [omega, n](double r) {
    const double l = std::log(r);
    return omega * std::pow(r, n - 3) / (l * l);
  };
  const SymTridiag wlog =
      kernels::scatter(kernels::element_mass(kernels::build_cell_quadrature(forms.grid.nodes, log_w, 16)));
  const std::size_t free = forms.free_size();
  const SymTridiag a = forms.stiffness.combine(1.0, forms.hardy, -c2).leading(free);
  const EigenResult e = smallest_pencil_eigen(a, wlog.leading(free));
  return {e.mu, r0 > 0.1 && e.mu < 1.0};
}

std::vector<SignLedgerEntry> sign_ledger(const std::vector<double>& exponents, int n) {
  const ModelManifold flat = make_manifold(ManifoldKind::EuclideanBall, 1.0, n, 1.0);
  std::vector<SignLedgerEntry> out;
  for (double a : exponents) {
    SignLedgerEntry e;
    e.a = a;
    e.coefficient = -a * (a - 1.0);
    e.analytic_sign = (e.coefficient > 0.0) - (e.coefficient < 0.0);
    e.branch = (a > -1.0 && a < -0.5) ? "sub" : (a <= -1.0 ? "super" : "other");
    // three nodes around r = 1e-4, fine enough that discretization error is negligible
    const double h = 1e-3, tc = std::log(1e-4);
    const std::vector<double> t{tc - h, tc, tc + h};
    std::vector<double> v(3);
    for (int i = 0; i < 3; ++i) v[i] = log_bubble_value(std::exp(t[i]), a, n);
    const double l = discrete_l(flat, t, v, 1, h, 0.0);
    e.discrete_sign = (l > 0.0) - (l < 0.0);
    out.push_back(e);
  }
  return out;
}

double log_bubble_energy(double a, int n, double r0, double eps) {
  if (!(eps > 0.0 && eps < r0 && r0 < 1.0)) throw DomainError("log bubble energy needs 0 < eps < r0 < 1");
  const double c = 0.5 * (n - 2);
  // v' = -r^{-c-1} L^{a-1} (c L + a), L = -log r
  const auto f = [=](double r) {
    const double L = -std::log(r);
    const double d = std::pow(r, -c - 1.0) * std::pow(L, a - 1.0) * (c * L + a);
    return d * d * std::pow(r, n - 1);
  };
  // integrate in s = log r, where the integrand is smooth
  const quad::Result res =
      quad::integrate([&](double s) { const double r = std::exp(s); return f(r) * r; }, std::log(eps), std::log(r0),
                      {0.0, 1e-10, 8000});
  return sphere_area(n - 1) * res.value;
}

}  // namespace hslab
