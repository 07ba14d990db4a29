#include "hslab/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hslab/bubble.hpp"
#include "hslab/error.hpp"
#include "hslab/tridiag.hpp"

namespace hslab {

namespace {

double smooth_step(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

double cutoff_profile(double r, double rc) {
  const double a = smooth_step(2.0 - r / rc), b = smooth_step(r / rc - 1.0);
  return a / (a + b);
}

struct Problem {
  const QuadraticForms& forms;
  SymTridiag a;  // K - lambda Mass on free unknowns
  SymTridiag p;  // SPD preconditioner
  TridiagFactor precond;
  std::size_t n;
  std::size_t full;

  double energy(std::span<const double> u) const { return a.quadratic(u); }

  // Scales u (full length) onto hs_functional = 1; returns false for a degenerate profile.
  bool project(std::vector<double>& u) const {
    const double g = forms.hs_functional(u);
    if (!(g > 0.0) || !std::isfinite(g)) return false;
    const double s = std::pow(g, -1.0 / forms.exponent);
    for (double& v : u) v *= s;
    return true;
  }
};

InitOutcome descend(const Problem& pb, std::vector<double>& u, const MinimizeParams& prm, double& grad_norm,
                    std::vector<double>& history) {
  InitOutcome out;
  const double p = pb.forms.exponent;
  if (!pb.project(u)) throw DomainError("initial profile has vanishing denominator");
  std::vector<double> hgrad(pb.full), g(pb.n), d(pb.n), trial(pb.full);
  double q = pb.energy(std::span<const double>(u).first(pb.n));
  out.initial_quotient = q;
  history.assign(1, q);

  for (int it = 0; it < prm.max_iters; ++it) {
    // On the constraint surface grad Q = 2 A u - (2/p) Q grad G.
    pb.forms.hs_functional_gradient(u, hgrad);
    const std::vector<double> au = pb.a.apply(std::span<const double>(u).first(pb.n));
    for (std::size_t i = 0; i < pb.n; ++i) g[i] = 2.0 * au[i] - (2.0 / p) * q * hgrad[i];
    pb.precond.solve(g, d);
    for (double& v : d) v = -0.5 * v;  // preconditioner 2P
    const double slope = std::inner_product(g.begin(), g.end(), d.begin(), 0.0);
    // |g|_{P^-1} / (2 |u|_P): relative distance to a stationary point in the energy norm
    const double unorm = std::sqrt(pb.p.quadratic(std::span<const double>(u).first(pb.n)));
    grad_norm = unorm > 0.0 ? std::sqrt(std::max(0.0, -2.0 * slope)) / (2.0 * unorm) : 0.0;
    out.iterations = it;
    if (grad_norm <= prm.grad_tol || slope >= 0.0) {
      out.converged = true;
      break;
    }
    auto value_at = [&](double tau) {
      std::copy(u.begin(), u.end(), trial.begin());
      for (std::size_t i = 0; i < pb.n; ++i) trial[i] += tau * d[i];
      return pb.project(trial) ? pb.energy(std::span<const double>(trial).first(pb.n))
                               : std::numeric_limits<double>::infinity();
    };
    // Armijo backtracking from tau = 1; a safeguarded parabolic step through
    // q(0), q'(0) and q(1) is tried first when the unit step overshoots or undershoots.
    double tau = 1.0;
    double qt = value_at(1.0);
    const double curv = qt - q - slope;
    if (curv > 0.0) {
      const double tp = std::clamp(-slope / (2.0 * curv), 0.05, 4.0);
      if (std::abs(tp - 1.0) > 0.1) {
        std::vector<double> keep = trial;
        const double qp = value_at(tp);
        if (qp < qt) {
          tau = tp;
          qt = qp;
        } else {
          trial.swap(keep);
        }
      }
    }
    bool accepted = qt <= q + prm.armijo * tau * slope;
    for (int bt = 0; !accepted && bt < prm.max_backtracks; ++bt) {
      tau = (bt == 0 ? 1.0 : tau) * prm.backtrack;
      qt = value_at(tau);
      accepted = qt <= q + prm.armijo * tau * slope;
    }
    if (!accepted) {
      // no descent at roundoff level: stationary to working precision
      out.converged = grad_norm <= std::sqrt(prm.grad_tol);
      break;
    }
    u.swap(trial);
    q = qt;
    // decrease has stopped at roundoff level over a window of accepted steps
    constexpr std::size_t window = 10;
    if (history.size() >= window && grad_norm <= std::sqrt(prm.grad_tol) &&
        history[history.size() - window] - q <= 64.0 * std::numeric_limits<double>::epsilon() * std::abs(q)) {
      history.push_back(q);
      out.iterations = it + 1;
      out.converged = true;
      out.stalled = true;
      break;
    }
    history.push_back(q);
    out.iterations = it + 1;
  }
  out.mu = q;
  return out;
}

}  // namespace

Profile bubble_init(const QuadraticForms& forms, double n, double cutoff) {
  if (forms.linear()) throw DomainError("bubble_init requires sigma < 2");
  if (!(n >= 1.0)) throw DomainError("bubble_init requires n >= 1");
  const double rc = cutoff > 0.0 ? cutoff : 0.5 * forms.grid.r_max;
  if (2.0 * rc > forms.grid.r_max * (1.0 + 1e-12)) throw DomainError("bubble cutoff exceeds the domain");
  const Dimension dim = forms.manifold.dimension();
  const SigmaExponent s(forms.sigma);
  const double amp = std::pow(n, 0.5 * (dim.value() - 2));
  return interpolate(forms.grid,
                     [&](double r) { return cutoff_profile(r, rc) * amp * bubble_value(n * r, dim, s); });
}

Profile constant_init(const QuadraticForms& forms) {
  return interpolate(forms.grid, [](double) { return 1.0; });
}

std::vector<InitialProfile> default_inits(const QuadraticForms& forms) {
  std::vector<InitialProfile> inits{{"constant", constant_init(forms)}};
  for (double n : {2.0, 8.0, 32.0})
    inits.push_back({"bubble(" + std::to_string(int(n)) + ")", bubble_init(forms, n)});
  return inits;
}

MinimizationResult minimize_quotient(const QuadraticForms& forms, double lambda,
                                     const std::vector<InitialProfile>& inits, const MinimizeParams& params) {
  if (forms.linear()) throw DomainError("minimize_quotient requires 0 < sigma < 2");
  if (inits.empty()) throw DomainError("minimize_quotient needs at least one initial profile");

  Problem pb{forms, {}, {}, {}, forms.free_size(), forms.grid.nodes.size()};
  pb.a = forms.stiffness.combine(1.0, forms.mass, -lambda).leading(pb.n);
  pb.p = pb.a;
  if (!pb.precond.factor(pb.p)) {
    pb.p = forms.stiffness.combine(1.0, forms.mass, 1.0 + std::abs(lambda)).leading(pb.n);
    if (!pb.precond.factor(pb.p)) throw NumericalError("preconditioner is not positive definite");
  }

  const std::size_t count = inits.size();
  std::vector<std::vector<double>> profiles(count);
  std::vector<InitOutcome> outcomes(count);
  std::vector<double> grads(count);
  std::vector<std::vector<double>> histories(count);
  std::vector<int> failed(count, 0);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < count; ++k) {
    profiles[k] = inits[k].u;
    if (profiles[k].size() != pb.full) {
      failed[k] = 1;
      continue;
    }
    if (forms.grid.bc == BoundaryCondition::Dirichlet) profiles[k].back() = 0.0;
    try {
      outcomes[k] = descend(pb, profiles[k], params, grads[k], histories[k]);
    } catch (const DomainError&) {
      failed[k] = 1;
    }
    outcomes[k].tag = inits[k].tag;
  }
  if (std::find(failed.begin(), failed.end(), 1) != failed.end())
    throw DomainError("an initial profile has the wrong length or a vanishing denominator");

  std::size_t best = 0;
  for (std::size_t k = 1; k < count; ++k)
    if (outcomes[k].mu < outcomes[best].mu) best = k;

  MinimizationResult res;
  res.profile = std::move(profiles[best]);
  for (double& v : res.profile) v = std::abs(v);
  res.mu_upper = evaluate_quotient(forms, res.profile, lambda);
  pb.project(res.profile);
  res.iterations = outcomes[best].iterations;
  res.grad_norm = grads[best];
  res.init_tag = inits[best].tag;
  res.converged = outcomes[best].converged;
  res.stalled = outcomes[best].stalled;
  res.concentration = concentration(forms, res.profile);
  res.energy_history = std::move(histories[best]);
  res.inits = std::move(outcomes);
  return res;
}

MinimizationResult minimize_quotient(const QuadraticForms& forms, double lambda, const MinimizeParams& params) {
  return minimize_quotient(forms, lambda, default_inits(forms), params);
}

}  // namespace hslab
