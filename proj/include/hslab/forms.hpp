#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hslab/kernels.hpp"
#include "hslab/manifold.hpp"
#include "hslab/tridiag.hpp"

namespace hslab {

enum class BoundaryCondition { Dirichlet, Reflected };

std::string_view to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(std::string_view text);

/// Graded radial grid r_i = r_max (i/M)^gamma, i = 0..M.
struct RadialGrid {
  std::vector<double> nodes;
  double r_max = 0.0;
  double gamma = 1.0;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;

  int cells() const noexcept { return static_cast<int>(nodes.size()) - 1; }
};

RadialGrid build_grid(double r_max, int cells, double gamma, BoundaryCondition bc);

/// Dyadic refinement M -> 2M; the old nodes are a subset of the new ones.
RadialGrid refine(const RadialGrid& grid);

/// Nodal values of a piecewise-linear radial function on a RadialGrid. For a
/// Dirichlet grid the last entry is zero.
using Profile = std::vector<double>;

/// Discrete forms of the quotient restricted to radial P1 functions.
/// Every integral carries the |S^{N-1}| angular factor, so the forms are
/// the actual integrals over the manifold.
///
///   stiffness:  int u'^2 psi^{N-1}
///   mass:       int u^2 psi^{N-1}
///   hardy:      int r^{-2} u^2 psi^{N-1}         (sigma = 2 only)
///   hs:         int r^{-sigma} |u|^p psi^{N-1}   (sigma < 2 only)
struct QuadraticForms {
  RadialGrid grid;
  ModelManifold manifold;
  double sigma = 2.0;
  double exponent = 2.0;  ///< 2*(sigma)
  double omega = 0.0;     ///< |S^{N-1}|
  SymTridiag stiffness;
  SymTridiag mass;
  SymTridiag hardy;
  kernels::CellQuadrature hs_points;  ///< weight r^{-sigma} psi^{N-1}

  /// Unknowns not fixed by the boundary condition.
  std::size_t free_size() const noexcept;
  bool linear() const noexcept { return sigma == 2.0; }

  /// int r^{-sigma} |u|^{2*} dv_g; for sigma = 2 the Hardy form u^T W u.
  double hs_functional(std::span<const double> u) const;

  /// hs_functional and its gradient (grad has the full nodal length).
  double hs_functional_gradient(std::span<const double> u, std::span<double> grad) const;
};

/// Assembles the forms on grid for the manifold and 0 < sigma <= 2.
QuadraticForms assemble_forms(const RadialGrid& grid, const ModelManifold& m, double sigma);

/// (u^T K u - lambda u^T Mass u) / D(u), D = hs_functional(u)^{2/2*}.
/// Any profile gives an upper bound for the discrete minimum.
double evaluate_quotient(const QuadraticForms& forms, std::span<const double> u, double lambda);

/// Fraction of the denominator carried by r < fraction * r_max.
double concentration(const QuadraticForms& forms, std::span<const double> u, double fraction = 0.01);

/// P1 interpolation of f on the grid (Dirichlet node forced to zero).
Profile interpolate(const RadialGrid& grid, const std::function<double(double)>& f);

}  // namespace hslab
