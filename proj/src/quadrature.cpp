#include "hslab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <queue>

#include "hslab/error.hpp"

namespace hslab::quad {

namespace {

GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at converged node
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

// Kronrod 15 / Gauss 7 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  resk *= h;
  resg *= h;
  return {a, b, resk, std::abs(resk - resg)};
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static const std::vector<GaussRule> table = [] {
    std::vector<GaussRule> t(65);
    for (int k = 1; k <= 64; ++k) t[k] = make_gauss_legendre(k);
    return t;
  }();
  if (n < 1 || n > 64) throw DomainError("gauss_legendre supports 1..64 points");
  return table[n];
}

Result integrate(const Integrand& f, std::span<const double> breakpoints, Tolerance tol) {
  if (breakpoints.size() < 2) throw DomainError("integrate needs at least two breakpoints");
  std::priority_queue<Segment> heap;
  Result out;
  double total = 0.0, error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;
    Segment s = kronrod15(f, breakpoints[i], breakpoints[i + 1]);
    out.evaluations += 15;
    total += s.value;
    error += s.error;
    heap.push(s);
  }
  int intervals = static_cast<int>(heap.size());
  while (!heap.empty() && error > std::max(tol.abs, tol.rel * std::abs(total))) {
    if (intervals >= tol.max_intervals) {
      out.converged = false;
      break;
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      out.converged = false;
      break;
    }
    heap.pop();
    const Segment left = kronrod15(f, worst.a, mid);
    const Segment right = kronrod15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // re-sum to shed the drift of the running totals
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.abs_error = error;
  if (error > std::max(tol.abs, tol.rel * std::abs(total))) out.converged = false;
  return out;
}

Result integrate(const Integrand& f, double a, double b, Tolerance tol) {
  const std::array<double, 2> ends{a, b};
  return integrate(f, std::span<const double>(ends), tol);
}

Result integrate_half_line(const Integrand& f, Tolerance tol) {
  // each half meets the relative target on its own; integrands here are nonnegative
  const Result head = integrate(f, 0.0, 1.0, tol);
  const Integrand tail_f = [&f](double t) { return f(1.0 / t) / (t * t); };
  const Result tail = integrate(tail_f, 0.0, 1.0, tol);
  return {head.value + tail.value, head.abs_error + tail.abs_error, head.evaluations + tail.evaluations,
          head.converged && tail.converged};
}

}  // namespace hslab::quad
