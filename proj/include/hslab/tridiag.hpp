#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hslab {

/// Symmetric tridiagonal matrix; off[i] couples rows i and i+1.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;

  SymTridiag() = default;
  explicit SymTridiag(std::size_t n) : diag(n, 0.0), off(n > 0 ? n - 1 : 0, 0.0) {}

  std::size_t size() const noexcept { return diag.size(); }

  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;
  double quadratic(std::span<const double> x) const;
  double bilinear(std::span<const double> x, std::span<const double> y) const;

  /// Leading n x n block (drops trailing rows/columns).
  SymTridiag leading(std::size_t n) const;

  /// a*this + b*other.
  SymTridiag combine(double a, const SymTridiag& other, double b) const;

  /// Max absolute row sum.
  double norm1() const;
};

/// Solves T x = rhs for symmetric positive definite tridiagonal T with an
/// LDL^T factorization; returns false if a nonpositive pivot shows up.
bool solve_spd(const SymTridiag& t, std::span<const double> rhs, std::span<double> x);

/// Cached LDL^T factor of an SPD tridiagonal matrix.
class TridiagFactor {
 public:
  /// Returns false (and leaves the factor unusable) when T is not positive definite.
  bool factor(const SymTridiag& t);
  void solve(std::span<const double> rhs, std::span<double> x) const;
  std::size_t size() const noexcept { return d_.size(); }

 private:
  std::vector<double> d_;
  std::vector<double> l_;
};

}  // namespace hslab
