#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hslab/eigensolver.hpp"
#include "hslab/error.hpp"

using namespace hslab;
using std::numbers::pi;

namespace {
QuadraticForms ball_forms(int cells) {
  const ModelManifold ball = make_manifold(ManifoldKind::EuclideanBall, 1.0, 3, 1.0);
  return assemble_forms(build_grid(1.0, cells, 2.0, BoundaryCondition::Dirichlet), ball, 2.0);
}
}  // namespace

TEST_CASE("inertia counts") {
  SymTridiag a(5);
  for (std::size_t i = 0; i < 5; ++i) a.diag[i] = 2.0 + i;
  for (std::size_t i = 0; i < 4; ++i) a.off[i] = -0.5;
  const std::vector<double> w{1.0, 2.0, 1.0, 0.5, 1.0};
  const auto [lo, hi] = gershgorin_bounds(a, w);
  CHECK(inertia_count(a, w, lo - 1e-9) == 0);
  CHECK(inertia_count(a, w, hi + 1e-9) == 5);
  // A = W: all eigenvalues equal 1
  SymTridiag b = a;
  CHECK(inertia_count(b, b, 1.0 - 1e-9) == 0);
  CHECK(inertia_count(b, b, 1.0 + 1e-9) == 5);
  // exact singularity at the shift is handled
  CHECK_NOTHROW(inertia_count(b, b, 1.0));
  CHECK_THROWS_AS(inertia_count(a, std::vector<double>{1.0, -1.0, 1.0, 1.0, 1.0}, 0.0), DomainError);
}

TEST_CASE("local Hardy quotient on the flat ball") {
  double prev = 1e300;
  for (int cells : {512, 1024, 2048}) {
    const QuadraticForms f = ball_forms(cells);
    const EigenResult e = smallest_generalized_eigen(f, 0.0);
    CHECK(e.residual <= 1e-9);
    CHECK(e.mu >= 0.25 - 1e-6);
    CHECK(e.mu <= prev);
    if (cells == 512) CHECK((e.mu >= 0.25 && e.mu <= 0.32));
    // inertia brackets the eigenvalue
    const SymTridiag a = f.stiffness.leading(f.free_size()), w = f.hardy.leading(f.free_size());
    CHECK(inertia_count(a, w, e.mu - 1e-8) == 0);
    CHECK(inertia_count(a, w, e.mu + 1e-8) >= 1);
    CHECK(evaluate_quotient(f, e.profile, 0.0) == doctest::Approx(e.mu).epsilon(1e-10));
    CHECK(f.hardy.quadratic(e.profile) == doctest::Approx(1.0).epsilon(1e-12));
    prev = e.mu;
  }
}

TEST_CASE("plain radial Laplacian recovers pi^2") {
  const QuadraticForms f = ball_forms(1024);
  const std::size_t n = f.free_size();
  const EigenResult e = smallest_pencil_eigen(f.stiffness.leading(n), f.mass.leading(n));
  CHECK(e.mu == doctest::Approx(pi * pi).epsilon(1e-4));
}

TEST_CASE("full sphere, lambda = 0: constant ground state") {
  const ModelManifold s3 = make_manifold(ManifoldKind::Sphere, 1.0, 3, pi);
  const QuadraticForms f = assemble_forms(build_grid(pi, 512, 2.0, BoundaryCondition::Reflected), s3, 2.0);
  const EigenResult e = smallest_generalized_eigen(f, 0.0);
  CHECK(std::abs(e.mu) <= 1e-8);
  const double first = e.profile.front();
  for (double v : e.profile) CHECK(v == doctest::Approx(first).epsilon(1e-6));
  // monotone in lambda
  double prev = 1e300;
  for (double lambda : {-3.0, -1.0, 0.0, 0.5, 1.0}) {
    const double mu = smallest_generalized_eigen(f, lambda).mu;
    CHECK(mu < prev);
    prev = mu;
  }
}

TEST_CASE("subspace fallback") {
  const QuadraticForms f = ball_forms(256);
  EigenOptions opt;
  opt.max_inverse_iters = 0;
  const EigenResult e = smallest_generalized_eigen(f, 0.0, {}, opt);
  CHECK(e.used_fallback);
  CHECK(e.residual <= 1e-9);
  CHECK(e.mu == doctest::Approx(smallest_generalized_eigen(f, 0.0).mu).epsilon(1e-9));
  CHECK_THROWS_AS(smallest_generalized_eigen(assemble_forms(f.grid, f.manifold, 1.0), 0.0), DomainError);
}

TEST_CASE("warm start gives the same answer") {
  const QuadraticForms f = ball_forms(512);
  const EigenResult a = smallest_generalized_eigen(f, -1.0);
  const EigenResult b = smallest_generalized_eigen(f, -1.1, a.profile);
  const EigenResult c = smallest_generalized_eigen(f, -1.1);
  CHECK(b.mu == doctest::Approx(c.mu).epsilon(1e-10));
}
