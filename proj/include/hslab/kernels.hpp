#pragma once

// Data-parallel inner loops of the radial finite-element forms. Each kernel
// has an OpenMP version and a serial reference with identical arithmetic;
// tests compare the two and bench/ times them. Parallel loops write per-cell
// partials that are reduced serially, so results do not depend on the
// thread count.

#include <functional>
#include <span>
#include <vector>

#include "hslab/tridiag.hpp"

namespace hslab::kernels {

using Weight = std::function<double(double)>;

/// Per-cell 2x2 element matrices [[left, coupling], [coupling, right]].
struct ElementMatrices {
  std::vector<double> left;
  std::vector<double> right;
  std::vector<double> coupling;
};

/// Quadrature points for per-cell integrals of piecewise-linear functions.
/// Points of cell c occupy [offset[c], offset[c+1]).
struct CellQuadrature {
  std::vector<std::size_t> offset;
  std::vector<double> radius;
  std::vector<double> weight;    ///< Gauss weight times the integration weight
  std::vector<double> phi_left;  ///< left hat function at the point
};

/// Builds points for the weight w(r) with `points` Gauss nodes per cell. The
/// first cell [0, r1] is split geometrically toward 0 so that weights
/// behaving like r^k (k > -1) are integrated to near machine precision.
CellQuadrature build_cell_quadrature(std::span<const double> nodes, const Weight& w, int points,
                                     int first_cell_levels = 40);

/// int w phi_a phi_b over each cell.
ElementMatrices element_mass(const CellQuadrature& q);
ElementMatrices element_mass_serial(const CellQuadrature& q);

/// int w phi_a' phi_b' over each cell.
ElementMatrices element_stiffness(const CellQuadrature& q, std::span<const double> nodes);
ElementMatrices element_stiffness_serial(const CellQuadrature& q, std::span<const double> nodes);

SymTridiag scatter(const ElementMatrices& e);

/// sum_q weight_q |u(r_q)|^p for piecewise-linear u.
double power_sum(const CellQuadrature& q, std::span<const double> u, double p);
double power_sum_serial(const CellQuadrature& q, std::span<const double> u, double p);

/// power_sum and its gradient with respect to the nodal values.
double power_sum_gradient(const CellQuadrature& q, std::span<const double> u, double p, std::span<double> grad);
double power_sum_gradient_serial(const CellQuadrature& q, std::span<const double> u, double p,
                                 std::span<double> grad);

}  // namespace hslab::kernels
