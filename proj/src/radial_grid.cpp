#include "quasiradial/radial_grid.hpp"

#include <cmath>
#include <numbers>

namespace quasiradial {

double unit_sphere_area(int N) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * N) / std::tgamma(0.5 * N);
}

RadialGrid build_grid(double r_min, double r_max, int n_nodes, const ProblemDims<double>& dims) {
  if (!(r_min > 0) || !(r_min < r_max) || !std::isfinite(r_max))
    throw BadRange("grid needs 0 < r_min < r_max");
  if (n_nodes < 16) throw BadRange("grid needs at least 16 nodes");
  const std::size_t n = static_cast<std::size_t>(n_nodes);
  const double s0 = std::log(r_min), s1 = std::log(r_max);
  const double h = (s1 - s0) / static_cast<double>(n - 1);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::exp(s0 + h * static_cast<double>(i));
  r.front() = r_min;
  r.back() = r_max;
  return grid_from_radii(std::move(r), dims);
}

RadialGrid grid_from_radii(std::vector<double> radii, const ProblemDims<double>& dims) {
  dims.validate();
  if (radii.size() < 2) throw BadRange("grid needs at least two radii");
  for (std::size_t i = 0; i < radii.size(); ++i)
    if (!(radii[i] > 0) || (i > 0 && !(radii[i - 1] < radii[i])))
      throw BadRange("radii must be positive and strictly increasing");

  RadialGrid g;
  g.dims = dims;
  g.omega = unit_sphere_area(dims.N);
  g.r = std::move(radii);
  const std::size_t n = g.r.size();
  g.h = std::log(g.r.back() / g.r.front()) / static_cast<double>(n - 1);

  const double N = dims.N;
  g.weights.assign(n, 0.0);
  g.cells.resize(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double lambda = N * std::log(g.r[j + 1] / g.r[j]);
    const double rn0 = std::pow(g.r[j], N), rn1 = std::pow(g.r[j + 1], N);
    // hat halves against e^{N s} ds on this cell, relative to e^{N s} at each end
    g.weights[j] += g.omega * rn0 * (std::expm1(lambda) - lambda) / (N * lambda);
    g.weights[j + 1] += g.omega * rn1 * (std::expm1(-lambda) + lambda) / (N * lambda);
    g.cells[j] = g.omega * rn0 * std::expm1(lambda) / N;
  }
  return g;
}

}  // namespace quasiradial
