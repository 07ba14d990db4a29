#include "hslab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hslab/error.hpp"

namespace hslab {

namespace {

// Negative pivots of the LDL^T factorization of A - shift W; -1 on a zero pivot.
int negative_pivots(const SymTridiag& a, const SymTridiag& w, double shift) {
  const std::size_t n = a.size();
  int count = 0;
  double d_prev = 0.0, e_prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = a.diag[i] - shift * w.diag[i];
    if (i > 0) d -= e_prev * e_prev / d_prev;
    if (d == 0.0) return -1;
    if (d < 0.0) ++count;
    if (i + 1 < n) e_prev = a.off[i] - shift * w.off[i];
    d_prev = d;
  }
  return count;
}

int count_with_retry(const SymTridiag& a, const SymTridiag& w, double shift) {
  double s = shift;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const int c = negative_pivots(a, w, s);
    if (c >= 0) return c;
    const double ulp = std::max(std::abs(s), 1.0) * std::numeric_limits<double>::epsilon();
    s += 4.0 * ulp * (attempt + 1);
  }
  throw NumericalError("inertia count: singular pencil at every perturbed shift");
}

SymTridiag diagonal_matrix(std::span<const double> w) {
  SymTridiag t(w.size());
  std::copy(w.begin(), w.end(), t.diag.begin());
  return t;
}

double norm2(std::span<const double> x) { return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0)); }

double rayleigh(const SymTridiag& a, const SymTridiag& w, std::span<const double> u) {
  return a.quadratic(u) / w.quadratic(u);
}

double backward_error(const SymTridiag& a, const SymTridiag& w, std::span<const double> u, double mu) {
  std::vector<double> au = a.apply(u), wu = w.apply(u);
  double s = 0.0;
  for (std::size_t i = 0; i < au.size(); ++i) s += (au[i] - mu * wu[i]) * (au[i] - mu * wu[i]);
  return std::sqrt(s) / ((a.norm1() + std::abs(mu) * w.norm1()) * norm2(u));
}

void w_normalize(const SymTridiag& w, std::vector<double>& u) {
  const double s = std::sqrt(w.quadratic(u));
  double sum = std::accumulate(u.begin(), u.end(), 0.0);
  const double sign = sum < 0.0 ? -1.0 : 1.0;
  for (double& v : u) v *= sign / s;
}

}  // namespace

int inertia_count(const SymTridiag& a, const SymTridiag& w, double shift) {
  if (a.size() != w.size()) throw DomainError("inertia_count: size mismatch");
  return count_with_retry(a, w, shift);
}

int inertia_count(const SymTridiag& a, std::span<const double> w_diag, double shift) {
  if (a.size() != w_diag.size()) throw DomainError("inertia_count: size mismatch");
  for (double v : w_diag)
    if (!(v > 0.0)) throw DomainError("inertia_count: W must be positive");
  return count_with_retry(a, diagonal_matrix(w_diag), shift);
}

std::pair<double, double> gershgorin_bounds(const SymTridiag& a, std::span<const double> w_diag) {
  const std::size_t n = a.size();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(a.off[i - 1]) / std::sqrt(w_diag[i] * w_diag[i - 1]);
    if (i + 1 < n) radius += std::abs(a.off[i]) / std::sqrt(w_diag[i] * w_diag[i + 1]);
    const double c = a.diag[i] / w_diag[i];
    lo = std::min(lo, c - radius);
    hi = std::max(hi, c + radius);
  }
  return {lo, hi};
}

EigenResult smallest_pencil_eigen(const SymTridiag& a, const SymTridiag& w, std::span<const double> warm_start,
                                  const EigenOptions& opt) {
  const std::size_t n = a.size();
  if (n == 0 || w.size() != n) throw DomainError("pencil: empty or mismatched matrices");
  TridiagFactor wf;
  if (!wf.factor(w)) throw DomainError("pencil: W is not positive definite");

  EigenResult res;

  // Upper end: Rayleigh quotient of a trial vector is >= mu_min.
  std::vector<double> trial(n, 1.0);
  if (warm_start.size() == n && norm2(warm_start) > 0.0) trial.assign(warm_start.begin(), warm_start.end());
  double hi = rayleigh(a, w, trial);
  double step = std::max(1.0, std::abs(hi));
  while (count_with_retry(a, w, hi) == 0) {
    hi += step;
    step *= 2.0;
  }
  double lo = hi - std::max(1.0, std::abs(hi));
  step = std::max(1.0, std::abs(lo));
  while (count_with_retry(a, w, lo) > 0) {
    lo -= step;
    step *= 2.0;
  }
  while (hi - lo > opt.bisection_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_with_retry(a, w, mid) == 0)
      lo = mid;
    else
      hi = mid;
    ++res.bisection_steps;
  }

  // A - lo W is positive definite (no eigenvalue below lo), so LDL^T is stable.
  SymTridiag shifted = a.combine(1.0, w, -lo);
  TridiagFactor sf;
  double shift = lo;
  for (int k = 0; !sf.factor(shifted) && k < 60; ++k) {
    shift -= std::max(opt.bisection_tol, 1e-14 * std::abs(lo)) * std::ldexp(1.0, k);
    shifted = a.combine(1.0, w, -shift);
  }

  std::vector<double> u = trial, rhs(n);
  w_normalize(w, u);
  double mu = rayleigh(a, w, u);
  double resid = backward_error(a, w, u, mu);
  for (int it = 0; it < opt.max_inverse_iters && resid > opt.residual_tol * 0.1; ++it) {
    w.apply(u, rhs);
    sf.solve(rhs, u);
    w_normalize(w, u);
    mu = rayleigh(a, w, u);
    resid = backward_error(a, w, u, mu);
    res.iterations = it + 1;
  }
  res.inverse_residual = resid;

  if (!(resid <= opt.residual_tol)) {
    // Two-vector subspace iteration on the shifted pencil with Rayleigh-Ritz.
    res.used_fallback = true;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::cos(3.0 * double(i) / double(n));
    for (int it = 0; it < opt.max_fallback_iters && resid > opt.residual_tol; ++it) {
      std::vector<double> x(n), y(n);
      w.apply(u, rhs);
      sf.solve(rhs, x);
      w.apply(v, rhs);
      sf.solve(rhs, y);
      // W-orthonormalize and solve the 2x2 projected problem
      const double nx = std::sqrt(w.quadratic(x));
      for (double& t : x) t /= nx;
      const double c = w.bilinear(x, y);
      for (std::size_t i = 0; i < n; ++i) y[i] -= c * x[i];
      const double ny = std::sqrt(w.quadratic(y));
      for (double& t : y) t /= ny;
      const double a11 = a.quadratic(x), a22 = a.quadratic(y), a12 = a.bilinear(x, y);
      const double tr = 0.5 * (a11 + a22), det = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
      const double theta = tr - det;
      double c1 = a12, c2 = theta - a11;
      if (std::abs(c1) + std::abs(c2) == 0.0) {
        c1 = 1.0;
        c2 = 0.0;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const double ui = c1 * x[i] + c2 * y[i];
        v[i] = -c2 * x[i] + c1 * y[i];
        u[i] = ui;
      }
      w_normalize(w, u);
      mu = rayleigh(a, w, u);
      resid = backward_error(a, w, u, mu);
      res.iterations = it + 1;
    }
  }

  res.mu = mu;
  res.residual = resid;
  res.profile = std::move(u);
  return res;
}

EigenResult smallest_generalized_eigen(const QuadraticForms& forms, double lambda, std::span<const double> warm_start,
                                       const EigenOptions& opt) {
  if (!forms.linear()) throw DomainError("eigensolver requires forms assembled with sigma = 2");
  const std::size_t n = forms.free_size();
  const SymTridiag a = forms.stiffness.combine(1.0, forms.mass, -lambda).leading(n);
  const SymTridiag w = forms.hardy.leading(n);
  std::span<const double> warm;
  if (warm_start.size() >= n) warm = warm_start.first(n);
  EigenResult res = smallest_pencil_eigen(a, w, warm, opt);
  res.profile.resize(forms.grid.nodes.size(), 0.0);
  res.concentration = concentration(forms, res.profile);
  return res;
}

}  // namespace hslab
