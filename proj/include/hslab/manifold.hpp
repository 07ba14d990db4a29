#pragma once

#include <string>
#include <string_view>

#include "hslab/constants.hpp"

namespace hslab {

enum class ManifoldKind { EuclideanBall, Sphere, HyperbolicCap };

std::string_view to_string(ManifoldKind kind);
ManifoldKind parse_manifold_kind(std::string_view text);

/// Rotationally symmetric model manifold dr^2 + psi(r)^2 dtheta^2 around a
/// pole p0, restricted to the geodesic ball of radius r_max. The radial
/// coordinate r is the geodesic distance to the pole.
class ModelManifold {
 public:
  ModelManifold(ManifoldKind kind, double scale, Dimension n, double r_max);

  ManifoldKind kind() const noexcept { return kind_; }
  double scale() const noexcept { return scale_; }
  Dimension dimension() const noexcept { return n_; }
  double r_max() const noexcept { return r_max_; }

  /// True for the sphere with r_max equal to the antipodal distance.
  bool is_closed() const noexcept;

  /// psi(r).
  double warp(double r) const noexcept;
  /// psi'(r).
  double warp_derivative(double r) const noexcept;
  /// psi(r)/r, continuous at r = 0 with value 1.
  double warp_ratio(double r) const noexcept;

 private:
  ManifoldKind kind_;
  double scale_;
  Dimension n_;
  double r_max_;
};

ModelManifold make_manifold(ManifoldKind kind, double scale, int n, double r_max);

/// psi(r)^{N-1}: dv_g = psi^{N-1} dr dtheta for radial integrands.
double volume_density(const ModelManifold& m, double r);

/// sqrt|g| in geodesic normal coordinates, (psi(r)/r)^{N-1}.
double normal_density(const ModelManifold& m, double r);

struct CurvatureData {
  double scalar_at_pole = 0.0;
  double ricci_radial_coeff = 0.0;
};

CurvatureData curvature_at_pole(const ModelManifold& m);
double scalar_curvature_at_pole(const ModelManifold& m);

/// Fits 1 - sqrt|g|(r) = c r^2 + d r^4 on (0, 0.1] and returns |c - S_g(p0)/(6N)|.
double density_expansion_residual(const ModelManifold& m);

struct CriterionResult {
  bool holds = false;             ///< S_g(p0) > -6 lambda
  bool in_theorem_regime = false; ///< lambda < 0 and N >= 4
  double scalar_curvature = 0.0;
  double threshold = 0.0;         ///< -6 lambda
};

CriterionResult curvature_criterion(const ModelManifold& m, double lambda);

}  // namespace hslab
