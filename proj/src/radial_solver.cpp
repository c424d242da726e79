#include "quasiradial/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quasiradial {

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

double max_abs(const std::vector<double>& u) {
  double m = 0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

void fill_report(SolveReport& rep, const DiscreteFunctional& F, const std::vector<double>& u,
                 const SolveOptions& options, const RadialFunction& uf) {
  rep.norm_X_p = F.norm_p(u);
  rep.energy = F.energy(u);
  rep.residual = F.residual(u);
  rep.nehari_gap = rep.norm_X_p > 0 ? std::abs(F.nehari_value(u)) / rep.norm_X_p : 0.0;
  rep.u_max = *std::max_element(u.begin(), u.end());
  rep.u_min = *std::min_element(u.begin(), u.end());
  const auto& dims = F.grid().dims;
  if (options.origin) rep.nu0_bound = pointwise_decay_exponent(*options.origin, dims);
  if (options.infinity) rep.nu_inf_bound = pointwise_decay_exponent(*options.infinity, dims);
  try {
    const auto [s0, s1] = decay_slopes(uf);
    rep.decay_slope_origin = s0;
    rep.decay_slope_infinity = s1;
  } catch (const Degenerate&) {
    rep.decay_slope_origin = rep.decay_slope_infinity = std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

std::pair<double, double> decay_slopes(const RadialFunction& u) {
  const auto& r = u.grid->r;
  const double threshold = 1e-12 * max_abs(u.values);
  if (!(threshold > 0)) throw Degenerate("function vanishes identically");
  std::size_t first = r.size(), last = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (std::abs(u.values[i]) > threshold) {
      first = std::min(first, i);
      last = std::max(last, i);
    }
  }
  auto fit = [&](double lo, double hi) {
    std::vector<double> x, y;
    for (std::size_t i = first; i <= last; ++i) {
      if (r[i] < lo || r[i] > hi || !(std::abs(u.values[i]) > threshold)) continue;
      x.push_back(std::log(r[i]));
      y.push_back(std::log(std::abs(u.values[i])));
    }
    if (x.size() < 3) throw Degenerate("support too small for a decay slope");
    return ls_slope(x, y);
  };
  const double tol = 1 + 1e-12;
  return {fit(r[first] / tol, r[first] * 10 * tol), fit(r[last] / 10 / tol, r[last] * tol)};
}

std::pair<RadialFunction, SolveReport> solve_ground_state(const PotentialTable& table,
                                                          const NonlinearitySpec& nl,
                                                          std::shared_ptr<const RadialGrid> grid,
                                                          const SolveOptions& options) {
  const DiscreteFunctional F(*grid, table, nl);
  const std::size_t n = F.size();
  const double p = grid->dims.p;
  SolveReport rep;
  for (std::size_t i = 0; i < n; ++i) rep.pinned_nodes += F.is_free(i) ? 0 : 1;

  auto collapse = [&](const std::string& why, const std::vector<double>& u) -> CollapsedToZero {
    rep.norm_X_p = F.norm_p(u);
    rep.u_max = max_abs(u);
    return CollapsedToZero(why, rep);
  };

  std::vector<double> u(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!F.is_free(i)) continue;
    const double s = std::log(grid->r[i]);
    const double damp = std::min(1.0, std::exp(-table.log_V[i] / p));
    u[i] = std::exp(-0.5 * s * s) * damp;
  }
  if (nl.is_zero()) throw collapse("nonlinearity vanishes identically; the only critical point is 0", u);
  auto project = [&](std::vector<double>& v) {
    const double t = F.nehari_scale(v);
    for (double& x : v) x *= t;
  };
  try {
    project(u);
  } catch (const NoProjection& e) {
    throw collapse(std::string("initial profile has no Nehari projection: ") + e.what(), u);
  }

  double E = F.energy(u);
  double tau = 1.0;
  std::vector<double> trial(n);
  for (int it = 0; it < options.max_iter; ++it) {
    rep.iterations = it;
    const double res = F.residual(u);
    const double np = F.norm_p(u);
    const double gap = std::abs(F.nehari_value(u)) / np;
    if (res <= options.tol && gap <= options.tol) {
      rep.converged = true;
      break;
    }
    const auto G = F.gradient(u);
    const auto d = F.precondition(u, G);
    long double slope = 0;
    for (std::size_t i = 0; i < n; ++i) slope += static_cast<long double>(G[i]) * d[i];

    bool accepted = false;
    for (int b = 0; b < options.max_backtracks; ++b) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = F.is_free(i) ? std::max(0.0, u[i] - tau * d[i]) : 0.0;
      double E_trial = std::numeric_limits<double>::infinity();
      try {
        project(trial);
        E_trial = F.energy(trial);
      } catch (const NoProjection&) {
      }
      if (E_trial <= E - options.armijo_c * tau * static_cast<double>(slope)) {
        accepted = true;
        if (!(E_trial < E)) rep.energy_monotone = false;
        u.swap(trial);
        E = E_trial;
        break;
      }
      tau *= options.contraction;
    }
    if (!accepted) {
      // no further decrease representable; accept convergence only on the criteria
      rep.iterations = it + 1;
      break;
    }
    tau = std::min(1.0, 2 * tau);
    if (max_abs(u) == 0) throw collapse("iterate collapsed to zero", u);
  }

  RadialFunction uf{grid, u};
  fill_report(rep, F, u, options, uf);
  rep.converged = rep.residual <= options.tol && rep.nehari_gap <= options.tol;
  if (!(rep.u_max > 0)) throw CollapsedToZero("iterate collapsed to zero", rep);
  if (!rep.converged)
    throw NotConverged("no convergence after " + std::to_string(rep.iterations) + " iterations (residual " +
                           std::to_string(rep.residual) + ")",
                       rep);
  return {std::move(uf), rep};
}

}  // namespace quasiradial
