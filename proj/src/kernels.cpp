#include "hslab/kernels.hpp"

#include <cmath>

#include "hslab/quadrature.hpp"

namespace hslab::kernels {

namespace {

void append_panel(CellQuadrature& q, const quad::GaussRule& rule, const Weight& w, double a, double b,
                  double cell_a, double cell_h) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double r = mid + half * rule.nodes[k];
    q.radius.push_back(r);
    q.weight.push_back(half * rule.weights[k] * w(r));
    q.phi_left.push_back(1.0 - (r - cell_a) / cell_h);
  }
}

inline double cell_power(const CellQuadrature& q, std::span<const double> u, double p, std::size_t c) {
  double s = 0.0;
  for (std::size_t k = q.offset[c]; k < q.offset[c + 1]; ++k) {
    const double v = q.phi_left[k] * u[c] + (1.0 - q.phi_left[k]) * u[c + 1];
    s += q.weight[k] * std::pow(std::abs(v), p);
  }
  return s;
}

inline double cell_power_gradient(const CellQuadrature& q, std::span<const double> u, double p, std::size_t c,
                                  double& gl, double& gr) {
  double s = 0.0;
  gl = 0.0;
  gr = 0.0;
  for (std::size_t k = q.offset[c]; k < q.offset[c + 1]; ++k) {
    const double phi = q.phi_left[k];
    const double v = phi * u[c] + (1.0 - phi) * u[c + 1];
    const double a = std::abs(v);
    const double vp = a > 0.0 ? std::pow(a, p - 1.0) : 0.0;
    s += q.weight[k] * vp * a;
    const double g = p * q.weight[k] * vp * (v < 0.0 ? -1.0 : 1.0);
    gl += g * phi;
    gr += g * (1.0 - phi);
  }
  return s;
}

inline void cell_mass(const CellQuadrature& q, std::size_t c, double& l, double& r, double& m) {
  l = r = m = 0.0;
  for (std::size_t k = q.offset[c]; k < q.offset[c + 1]; ++k) {
    const double phi = q.phi_left[k];
    l += q.weight[k] * phi * phi;
    r += q.weight[k] * (1.0 - phi) * (1.0 - phi);
    m += q.weight[k] * phi * (1.0 - phi);
  }
}

inline double cell_weight_integral(const CellQuadrature& q, std::size_t c) {
  double s = 0.0;
  for (std::size_t k = q.offset[c]; k < q.offset[c + 1]; ++k) s += q.weight[k];
  return s;
}

std::size_t cells_of(const CellQuadrature& q) { return q.offset.empty() ? 0 : q.offset.size() - 1; }

}  // namespace

CellQuadrature build_cell_quadrature(std::span<const double> nodes, const Weight& w, int points,
                                     int first_cell_levels) {
  const quad::GaussRule& rule = quad::gauss_legendre(points);
  CellQuadrature q;
  const std::size_t cells = nodes.size() - 1;
  q.offset.reserve(cells + 1);
  q.offset.push_back(0);
  for (std::size_t c = 0; c < cells; ++c) {
    const double a = nodes[c];
    const double b = nodes[c + 1];
    const double h = b - a;
    if (c == 0 && a == 0.0 && first_cell_levels > 0) {
      double lo = std::ldexp(h, -first_cell_levels);
      append_panel(q, rule, w, 0.0, lo, a, h);
      for (int j = first_cell_levels; j > 0; --j) {
        const double hi = std::ldexp(h, -(j - 1));
        append_panel(q, rule, w, lo, hi, a, h);
        lo = hi;
      }
    } else {
      append_panel(q, rule, w, a, b, a, h);
    }
    q.offset.push_back(q.radius.size());
  }
  return q;
}

ElementMatrices element_mass(const CellQuadrature& q) {
  const std::size_t cells = cells_of(q);
  ElementMatrices e{std::vector<double>(cells), std::vector<double>(cells), std::vector<double>(cells)};
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cells); ++c)
    cell_mass(q, c, e.left[c], e.right[c], e.coupling[c]);
  return e;
}

ElementMatrices element_mass_serial(const CellQuadrature& q) {
  const std::size_t cells = cells_of(q);
  ElementMatrices e{std::vector<double>(cells), std::vector<double>(cells), std::vector<double>(cells)};
  for (std::size_t c = 0; c < cells; ++c) cell_mass(q, c, e.left[c], e.right[c], e.coupling[c]);
  return e;
}

ElementMatrices element_stiffness(const CellQuadrature& q, std::span<const double> nodes) {
  const std::size_t cells = cells_of(q);
  ElementMatrices e{std::vector<double>(cells), std::vector<double>(cells), std::vector<double>(cells)};
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cells); ++c) {
    const double h = nodes[c + 1] - nodes[c];
    const double k = cell_weight_integral(q, c) / (h * h);
    e.left[c] = k;
    e.right[c] = k;
    e.coupling[c] = -k;
  }
  return e;
}

ElementMatrices element_stiffness_serial(const CellQuadrature& q, std::span<const double> nodes) {
  const std::size_t cells = cells_of(q);
  ElementMatrices e{std::vector<double>(cells), std::vector<double>(cells), std::vector<double>(cells)};
  for (std::size_t c = 0; c < cells; ++c) {
    const double h = nodes[c + 1] - nodes[c];
    const double k = cell_weight_integral(q, c) / (h * h);
    e.left[c] = k;
    e.right[c] = k;
    e.coupling[c] = -k;
  }
  return e;
}

SymTridiag scatter(const ElementMatrices& e) {
  const std::size_t cells = e.left.size();
  SymTridiag t(cells + 1);
  for (std::size_t c = 0; c < cells; ++c) {
    t.diag[c] += e.left[c];
    t.diag[c + 1] += e.right[c];
    t.off[c] += e.coupling[c];
  }
  return t;
}

double power_sum(const CellQuadrature& q, std::span<const double> u, double p) {
  const std::size_t cells = cells_of(q);
  std::vector<double> partial(cells);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cells); ++c) partial[c] = cell_power(q, u, p, c);
  double s = 0.0;
  for (double v : partial) s += v;
  return s;
}

double power_sum_serial(const CellQuadrature& q, std::span<const double> u, double p) {
  double s = 0.0;
  for (std::size_t c = 0; c < cells_of(q); ++c) s += cell_power(q, u, p, c);
  return s;
}

double power_sum_gradient(const CellQuadrature& q, std::span<const double> u, double p, std::span<double> grad) {
  const std::size_t cells = cells_of(q);
  std::vector<double> partial(cells), gl(cells), gr(cells);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cells); ++c)
    partial[c] = cell_power_gradient(q, u, p, c, gl[c], gr[c]);
  double s = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = 0.0;
  for (std::size_t c = 0; c < cells; ++c) {
    s += partial[c];
    grad[c] += gl[c];
    grad[c + 1] += gr[c];
  }
  return s;
}

double power_sum_gradient_serial(const CellQuadrature& q, std::span<const double> u, double p,
                                 std::span<double> grad) {
  double s = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = 0.0;
  for (std::size_t c = 0; c < cells_of(q); ++c) {
    double gl = 0.0, gr = 0.0;
    s += cell_power_gradient(q, u, p, c, gl, gr);
    grad[c] += gl;
    grad[c + 1] += gr;
  }
  return s;
}

}  // namespace hslab::kernels
