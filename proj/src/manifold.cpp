#include "hslab/manifold.hpp"

#include <cmath>
#include <numbers>

#include "hslab/error.hpp"

namespace hslab {

std::string_view to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::EuclideanBall: return "euclidean";
    case ManifoldKind::Sphere: return "sphere";
    case ManifoldKind::HyperbolicCap: return "hyperbolic";
  }
  return "unknown";
}

ManifoldKind parse_manifold_kind(std::string_view text) {
  if (text == "euclidean" || text == "euclidean-ball" || text == "ball") return ManifoldKind::EuclideanBall;
  if (text == "sphere") return ManifoldKind::Sphere;
  if (text == "hyperbolic" || text == "hyperbolic-cap") return ManifoldKind::HyperbolicCap;
  throw DomainError("unknown manifold kind '" + std::string(text) + "'");
}

ModelManifold::ModelManifold(ManifoldKind kind, double scale, Dimension n, double r_max)
    : kind_(kind), scale_(scale), n_(n), r_max_(r_max) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("manifold scale must be positive");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("manifold r_max must be positive");
  // tolerate the decimal rendering of pi*a
  if (kind == ManifoldKind::Sphere && r_max > std::numbers::pi * scale * (1.0 + 1e-12))
    throw DomainError("sphere r_max exceeds the antipodal distance pi*a");
  if (kind == ManifoldKind::Sphere) r_max_ = std::min(r_max, std::numbers::pi * scale);
}

bool ModelManifold::is_closed() const noexcept {
  return kind_ == ManifoldKind::Sphere && r_max_ >= std::numbers::pi * scale_ * (1.0 - 1e-12);
}

double ModelManifold::warp(double r) const noexcept {
  switch (kind_) {
    case ManifoldKind::EuclideanBall: return r;
    case ManifoldKind::Sphere: return scale_ * std::sin(r / scale_);
    case ManifoldKind::HyperbolicCap: return scale_ * std::sinh(r / scale_);
  }
  return r;
}

double ModelManifold::warp_derivative(double r) const noexcept {
  switch (kind_) {
    case ManifoldKind::EuclideanBall: return 1.0;
    case ManifoldKind::Sphere: return std::cos(r / scale_);
    case ManifoldKind::HyperbolicCap: return std::cosh(r / scale_);
  }
  return 1.0;
}

double ModelManifold::warp_ratio(double r) const noexcept {
  if (kind_ == ManifoldKind::EuclideanBall) return 1.0;
  const double x = r / scale_;
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    const double sgn = kind_ == ManifoldKind::Sphere ? -1.0 : 1.0;
    return 1.0 + sgn * x2 / 6.0 + x2 * x2 / 120.0;
  }
  return kind_ == ManifoldKind::Sphere ? std::sin(x) / x : std::sinh(x) / x;
}

ModelManifold make_manifold(ManifoldKind kind, double scale, int n, double r_max) {
  return ModelManifold(kind, scale, Dimension(n), r_max);
}

namespace {
void check_radius(const ModelManifold& m, double r) {
  if (!(r >= 0.0) || r > m.r_max() * (1.0 + 1e-12)) throw DomainError("radius outside the manifold domain");
}
}  // namespace

double volume_density(const ModelManifold& m, double r) {
  check_radius(m, r);
  return std::pow(m.warp(r), m.dimension().value() - 1);
}

double normal_density(const ModelManifold& m, double r) {
  check_radius(m, r);
  return std::pow(m.warp_ratio(r), m.dimension().value() - 1);
}

CurvatureData curvature_at_pole(const ModelManifold& m) {
  const double N = m.dimension().value();
  const double k = 1.0 / (m.scale() * m.scale());
  double sectional = 0.0;
  if (m.kind() == ManifoldKind::Sphere) sectional = k;
  if (m.kind() == ManifoldKind::HyperbolicCap) sectional = -k;
  const double ricci = (N - 1.0) * sectional;
  return {N * ricci, ricci};
}

double scalar_curvature_at_pole(const ModelManifold& m) { return curvature_at_pole(m).scalar_at_pole; }

double density_expansion_residual(const ModelManifold& m) {
  const double N = m.dimension().value();
  const double r_hi = std::min(0.1, m.r_max());
  // least squares for y = c r^2 + d r^4 via the 2x2 normal equations in
  // scaled variables x = (r/r_hi)^2
  double s22 = 0, s24 = 0, s44 = 0, sy2 = 0, sy4 = 0;
  constexpr int samples = 200;
  for (int k = 1; k <= samples; ++k) {
    const double r = r_hi * k / samples;
    const double x = (r / r_hi) * (r / r_hi);
    const double y = 1.0 - normal_density(m, r);
    s22 += x * x;
    s24 += x * x * x;
    s44 += x * x * x * x;
    sy2 += y * x;
    sy4 += y * x * x;
  }
  const double det = s22 * s44 - s24 * s24;
  const double c_scaled = (sy2 * s44 - sy4 * s24) / det;
  const double c = c_scaled / (r_hi * r_hi);
  return std::abs(c - scalar_curvature_at_pole(m) / (6.0 * N));
}

CriterionResult curvature_criterion(const ModelManifold& m, double lambda) {
  CriterionResult out;
  out.scalar_curvature = scalar_curvature_at_pole(m);
  out.threshold = -6.0 * lambda;
  out.holds = out.scalar_curvature > out.threshold;
  out.in_theorem_regime = lambda < 0.0 && m.dimension().value() >= 4;
  return out;
}

}  // namespace hslab
