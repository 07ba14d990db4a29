#include "hslab/tridiag.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hslab {

void SymTridiag::apply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = size();
  assert(x.size() >= n && y.size() >= n);
  if (n == 0) return;
  for (std::size_t i = 0; i < n; ++i) y[i] = diag[i] * x[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    y[i] += off[i] * x[i + 1];
    y[i + 1] += off[i] * x[i];
  }
}

std::vector<double> SymTridiag::apply(std::span<const double> x) const {
  std::vector<double> y(size());
  apply(x, y);
  return y;
}

double SymTridiag::quadratic(std::span<const double> x) const { return bilinear(x, x); }

double SymTridiag::bilinear(std::span<const double> x, std::span<const double> y) const {
  const std::size_t n = size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += diag[i] * x[i] * y[i];
  for (std::size_t i = 0; i + 1 < n; ++i) s += off[i] * (x[i] * y[i + 1] + x[i + 1] * y[i]);
  return s;
}

SymTridiag SymTridiag::leading(std::size_t n) const {
  SymTridiag t;
  n = std::min(n, size());
  t.diag.assign(diag.begin(), diag.begin() + static_cast<std::ptrdiff_t>(n));
  t.off.assign(off.begin(), off.begin() + static_cast<std::ptrdiff_t>(n > 0 ? n - 1 : 0));
  return t;
}

SymTridiag SymTridiag::combine(double a, const SymTridiag& other, double b) const {
  assert(other.size() == size());
  SymTridiag t(size());
  for (std::size_t i = 0; i < diag.size(); ++i) t.diag[i] = a * diag[i] + b * other.diag[i];
  for (std::size_t i = 0; i < off.size(); ++i) t.off[i] = a * off[i] + b * other.off[i];
  return t;
}

double SymTridiag::norm1() const {
  double best = 0.0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    double s = std::abs(diag[i]);
    if (i > 0) s += std::abs(off[i - 1]);
    if (i + 1 < n) s += std::abs(off[i]);
    best = std::max(best, s);
  }
  return best;
}

bool TridiagFactor::factor(const SymTridiag& t) {
  const std::size_t n = t.size();
  d_.assign(n, 0.0);
  l_.assign(n > 0 ? n - 1 : 0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double di = t.diag[i];
    if (i > 0) di -= l_[i - 1] * t.off[i - 1];
    if (!(di > 0.0)) {
      d_.clear();
      return false;
    }
    d_[i] = di;
    if (i + 1 < n) l_[i] = t.off[i] / di;
  }
  return true;
}

void TridiagFactor::solve(std::span<const double> rhs, std::span<double> x) const {
  const std::size_t n = d_.size();
  assert(rhs.size() >= n && x.size() >= n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] - (i > 0 ? l_[i - 1] * x[i - 1] : 0.0);
  for (std::size_t i = 0; i < n; ++i) x[i] /= d_[i];
  for (std::size_t i = n; i-- > 1;) x[i - 1] -= l_[i - 1] * x[i];
}

bool solve_spd(const SymTridiag& t, std::span<const double> rhs, std::span<double> x) {
  TridiagFactor f;
  if (!f.factor(t)) return false;
  f.solve(rhs, x);
  return true;
}

}  // namespace hslab
