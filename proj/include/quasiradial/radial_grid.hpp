#pragma once

// Log-uniform radial grids with quadrature weights for integrals over R^N of
// radial integrands.

#include "quasiradial/exponent_calculus.hpp"

#include <memory>
#include <vector>

namespace quasiradial {

/// Surface area of the unit sphere in R^N, 2 pi^{N/2} / Gamma(N/2).
double unit_sphere_area(int N);

struct RadialGrid {
  std::vector<double> r;
  double h = 0;                  // uniform step in log r
  std::vector<double> weights;   // int over R^N of the nodal hat functions
  std::vector<double> cells;     // |B_{r_{j+1}} \ B_{r_j}|, one per cell
  ProblemDims<double> dims;
  double omega = 0;              // unit sphere area

  std::size_t size() const { return r.size(); }
  double r_min() const { return r.front(); }
  double r_max() const { return r.back(); }
};

/// Hat functions are piecewise linear in log r. Weights are the exact
/// integrals of those hats against omega r^{N-1} dr, so constants integrate
/// exactly and smooth integrands with O(h^2) error.
/// Throws BadRange unless 0 < r_min < r_max and n_nodes >= 16.
RadialGrid build_grid(double r_min, double r_max, int n_nodes, const ProblemDims<double>& dims);

/// Same weights on arbitrary strictly increasing positive radii.
RadialGrid grid_from_radii(std::vector<double> radii, const ProblemDims<double>& dims);

/// Quadrature of g(r) over {r_min < |x| < r_max} using the node weights.
template <typename G>
double integrate(const RadialGrid& grid, G&& g) {
  long double s = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) s += static_cast<long double>(grid.weights[i]) * g(grid.r[i]);
  return static_cast<double>(s);
}

/// Nodal values on a grid; the value at r_max is zero for trial functions of
/// the truncated problem.
struct RadialFunction {
  std::shared_ptr<const RadialGrid> grid;
  std::vector<double> values;
};

}  // namespace quasiradial
