#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hslab/kernels.hpp"

using namespace hslab;
using namespace hslab::kernels;

namespace {
std::vector<double> graded(int cells, double r_max, double gamma) {
  std::vector<double> r(cells + 1);
  for (int i = 0; i <= cells; ++i) r[i] = r_max * std::pow(double(i) / cells, gamma);
  return r;
}
}  // namespace

TEST_CASE("element matrices for a unit weight") {
  const std::vector<double> nodes{0.0, 0.5, 1.5, 2.0};
  const CellQuadrature q = build_cell_quadrature(nodes, [](double) { return 1.0; }, 4);
  const ElementMatrices m = element_mass(q), k = element_stiffness(q, nodes);
  for (std::size_t c = 0; c + 1 < nodes.size(); ++c) {
    const double h = nodes[c + 1] - nodes[c];
    CHECK(m.left[c] == doctest::Approx(h / 3));
    CHECK(m.right[c] == doctest::Approx(h / 3));
    CHECK(m.coupling[c] == doctest::Approx(h / 6));
    CHECK(k.left[c] == doctest::Approx(1 / h));
    CHECK(k.coupling[c] == doctest::Approx(-1 / h));
  }
  const SymTridiag t = scatter(m);
  CHECK(t.size() == nodes.size());
  CHECK(t.diag[1] == doctest::Approx(0.5 / 3 + 1.0 / 3));
}

TEST_CASE("first cell resolves power-law weights") {
  // int_0^h r^k phi_0^2 dr for phi_0 = 1 - r/h, k = 0.2
  const double h = 0.01, k = 0.2;
  const std::vector<double> nodes{0.0, h, 2 * h};
  const CellQuadrature q = build_cell_quadrature(nodes, [k](double r) { return std::pow(r, k); }, 16);
  const ElementMatrices m = element_mass(q);
  // exact: h^{k+1} * B(k+1, 3) * 2 = h^{k+1} * 2 / ((k+1)(k+2)(k+3))
  const double exact = std::pow(h, k + 1) * 2.0 / ((k + 1) * (k + 2) * (k + 3));
  CHECK(m.left[0] == doctest::Approx(exact).epsilon(1e-12).scale(0.0));
}

TEST_CASE("parallel kernels reproduce the serial references") {
  const std::vector<double> nodes = graded(777, 3.0, 2.0);
  const Weight w = [](double r) { return std::pow(std::sin(r), 3) / (r * r); };
  const CellQuadrature q = build_cell_quadrature(nodes, w, 8);
  const ElementMatrices a = element_mass(q), b = element_mass_serial(q);
  const ElementMatrices ka = element_stiffness(q, nodes), kb = element_stiffness_serial(q, nodes);
  CHECK(a.left == b.left);
  CHECK(a.right == b.right);
  CHECK(a.coupling == b.coupling);
  CHECK(ka.left == kb.left);
  CHECK(ka.coupling == kb.coupling);

  std::vector<double> u(nodes.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::cos(nodes[i]) + 0.1 * std::sin(7 * nodes[i]);
  CHECK(power_sum(q, u, 3.5) == power_sum_serial(q, u, 3.5));
  std::vector<double> g1(u.size()), g2(u.size());
  const double v1 = power_sum_gradient(q, u, 3.5, g1), v2 = power_sum_gradient_serial(q, u, 3.5, g2);
  CHECK(v1 == v2);
  CHECK(g1 == g2);
  CHECK(v1 == doctest::Approx(power_sum(q, u, 3.5)).epsilon(1e-15));
}

TEST_CASE("power_sum gradient matches finite differences") {
  const std::vector<double> nodes = graded(40, 1.0, 2.0);
  const CellQuadrature q = build_cell_quadrature(nodes, [](double r) { return r * r; }, 8);
  std::vector<double> u(nodes.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = 1.0 - nodes[i] * nodes[i] + 0.05;
  std::vector<double> g(u.size());
  power_sum_gradient(q, u, 3.0, g);
  for (std::size_t i : {0u, 5u, 20u, 39u, 40u}) {
    std::vector<double> up = u, um = u;
    up[i] += 1e-6;
    um[i] -= 1e-6;
    const double fd = (power_sum(q, up, 3.0) - power_sum(q, um, 3.0)) / 2e-6;
    CHECK(g[i] == doctest::Approx(fd).epsilon(1e-6));
  }
}
