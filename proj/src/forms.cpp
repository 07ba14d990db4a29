#include "hslab/forms.hpp"

#include <cmath>
#include <string>

#include "hslab/constants.hpp"
#include "hslab/error.hpp"

namespace hslab {

namespace {
constexpr int kMatrixPoints = 16;
constexpr int kHsPoints = 8;
}  // namespace

std::string_view to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "reflected";
}

BoundaryCondition parse_boundary_condition(std::string_view text) {
  if (text == "dirichlet") return BoundaryCondition::Dirichlet;
  if (text == "reflected" || text == "neumann") return BoundaryCondition::Reflected;
  throw DomainError("unknown boundary condition '" + std::string(text) + "'");
}

RadialGrid build_grid(double r_max, int cells, double gamma, BoundaryCondition bc) {
  if (cells < 8) throw DomainError("grid needs at least 8 cells, got " + std::to_string(cells));
  if (!(gamma >= 1.0 && gamma <= 4.0)) throw DomainError("grid grading must lie in [1, 4]");
  if (!(r_max > 0.0)) throw DomainError("grid r_max must be positive");
  RadialGrid g;
  g.r_max = r_max;
  g.gamma = gamma;
  g.bc = bc;
  g.nodes.resize(cells + 1);
  for (int i = 0; i <= cells; ++i) g.nodes[i] = r_max * std::pow(double(i) / cells, gamma);
  g.nodes.back() = r_max;
  return g;
}

RadialGrid refine(const RadialGrid& grid) { return build_grid(grid.r_max, 2 * grid.cells(), grid.gamma, grid.bc); }

std::size_t QuadraticForms::free_size() const noexcept {
  return grid.bc == BoundaryCondition::Dirichlet ? grid.nodes.size() - 1 : grid.nodes.size();
}

double QuadraticForms::hs_functional(std::span<const double> u) const {
  if (linear()) return hardy.quadratic(u);
  return kernels::power_sum(hs_points, u, exponent);
}

double QuadraticForms::hs_functional_gradient(std::span<const double> u, std::span<double> grad) const {
  if (linear()) {
    hardy.apply(u, grad);
    for (double& g : grad) g *= 2.0;
    return hardy.quadratic(u);
  }
  return kernels::power_sum_gradient(hs_points, u, exponent, grad);
}

QuadraticForms assemble_forms(const RadialGrid& grid, const ModelManifold& m, double sigma) {
  if (!(sigma > 0.0 && sigma <= 2.0)) throw DomainError("forms require 0 < sigma <= 2");
  if (grid.r_max > m.r_max() * (1.0 + 1e-12)) throw DomainError("grid extends beyond the manifold");

  const int N = m.dimension().value();
  QuadraticForms f{grid, m, sigma, 2.0, 0.0, {}, {}, {}, {}};
  f.sigma = sigma;
  f.exponent = critical_exponent(SigmaExponent(sigma), m.dimension());
  f.omega = sphere_area(N - 1);
  const double omega = f.omega;

  const kernels::Weight density = [&m, omega, N](double r) { return omega * std::pow(m.warp(r), N - 1); };
  const kernels::CellQuadrature dq = kernels::build_cell_quadrature(grid.nodes, density, kMatrixPoints);
  f.stiffness = kernels::scatter(kernels::element_stiffness(dq, grid.nodes));
  f.mass = kernels::scatter(kernels::element_mass(dq));

  // r^{-sigma} psi^{N-1} = r^{N-1-sigma} (psi/r)^{N-1}, integrable at 0 for N >= 3
  const kernels::Weight hs_w = [&m, omega, N, sigma](double r) {
    return omega * std::pow(r, N - 1 - sigma) * std::pow(m.warp_ratio(r), N - 1);
  };
  f.hs_points = kernels::build_cell_quadrature(grid.nodes, hs_w, f.linear() ? kMatrixPoints : kHsPoints);
  if (f.linear()) f.hardy = kernels::scatter(kernels::element_mass(f.hs_points));
  return f;
}

double evaluate_quotient(const QuadraticForms& forms, std::span<const double> u, double lambda) {
  bool nonzero = false;
  for (double v : u) nonzero = nonzero || v != 0.0;
  if (!nonzero) throw DomainError("quotient of the zero profile is undefined");
  const double numerator = forms.stiffness.quadratic(u) - lambda * forms.mass.quadratic(u);
  const double d = forms.hs_functional(u);
  if (!(d > 0.0)) throw DomainError("quotient denominator vanishes");
  return numerator / std::pow(d, 2.0 / forms.exponent);
}

double concentration(const QuadraticForms& forms, std::span<const double> u, double fraction) {
  const double cut = fraction * forms.grid.r_max;
  const double total = forms.hs_functional(u);
  if (!(total > 0.0)) return 0.0;
  // Quadrature points below the cut; the straddling cell is split at its points.
  const auto& q = forms.hs_points;
  const auto& nodes = forms.grid.nodes;
  double inner = 0.0;
  for (std::size_t c = 0; c + 1 < q.offset.size() && nodes[c] < cut; ++c) {
    for (std::size_t k = q.offset[c]; k < q.offset[c + 1]; ++k) {
      if (q.radius[k] >= cut) continue;
      const double v = q.phi_left[k] * u[c] + (1.0 - q.phi_left[k]) * u[c + 1];
      inner += q.weight[k] * std::pow(std::abs(v), forms.exponent);
    }
  }
  return inner / total;
}

Profile interpolate(const RadialGrid& grid, const std::function<double(double)>& f) {
  Profile u(grid.nodes.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = f(grid.nodes[i]);
  if (grid.bc == BoundaryCondition::Dirichlet) u.back() = 0.0;
  return u;
}

}  // namespace hslab
