#pragma once

// Nonnegative nontrivial critical points of the discrete Euler functional by
// preconditioned descent on the Nehari set.

#include "quasiradial/discrete_functional.hpp"

#include <optional>
#include <utility>

namespace quasiradial {

struct SolveOptions {
  double tol = 1e-6;
  int max_iter = 5000;
  double armijo_c = 1e-4;
  double contraction = 0.5;
  int max_backtracks = 60;
  /// Pointwise decay exponents to report next to the measured slopes.
  std::optional<EndpointAsymptotics<double>> origin;
  std::optional<EndpointAsymptotics<double>> infinity;
};

struct SolveReport {
  double energy = 0;
  double norm_X_p = 0;
  double residual = 0;
  double nehari_gap = 0;
  int iterations = 0;
  double decay_slope_origin = 0;
  double decay_slope_infinity = 0;
  double nu0_bound = 0;    // (p(N-1) - (p-1) gamma_0 + a_0)/p^2
  double nu_inf_bound = 0; // (p(N-1) - (p-1) gamma_inf + a_inf)/p^2
  double u_max = 0;
  double u_min = 0;
  bool converged = false;
  bool energy_monotone = true;
  int pinned_nodes = 0;
};

class NotConverged : public Error {
 public:
  NotConverged(const std::string& what, SolveReport report) : Error(what), report_(std::move(report)) {}
  const SolveReport& report() const { return report_; }

 private:
  SolveReport report_;
};

class CollapsedToZero : public Error {
 public:
  CollapsedToZero(const std::string& what, SolveReport report) : Error(what), report_(std::move(report)) {}
  const SolveReport& report() const { return report_; }

 private:
  SolveReport report_;
};

/// Log-log least-squares slopes of |u| over the innermost and outermost
/// decades where |u| > 1e-12 max|u|. Throws Degenerate when either decade
/// holds fewer than three such nodes.
std::pair<double, double> decay_slopes(const RadialFunction& u);

/// Starts from a bump centred at r = 1 (width 1 in log r), damped where V is
/// large, and iterates u <- Nehari(max(u - tau P^{-1} I'(u), 0)) with Armijo
/// backtracking on tau. Throws NotConverged or CollapsedToZero.
std::pair<RadialFunction, SolveReport> solve_ground_state(const PotentialTable& table,
                                                          const NonlinearitySpec& nl,
                                                          std::shared_ptr<const RadialGrid> grid,
                                                          const SolveOptions& options = {});

}  // namespace quasiradial
