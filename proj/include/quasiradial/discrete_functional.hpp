#pragma once

// Discrete Euler functional
//
//   I(u) = (1/p) [ sum_j c_j A_j |delta_j|^p + sum_i w_i V_i |u_i|^p ] - sum_i w_i K_i F(u_i)
//
// on a RadialGrid, with delta_j the slope of u on cell j, c_j the cell volume,
// A_j the geometric mean of A at the cell ends and w_i the node weights.
// The last node carries a homogeneous Dirichlet condition. Nodes where
// w_i V_i or w_i K_i overflows are pinned to zero as well.

#include "quasiradial/nonlinearity.hpp"
#include "quasiradial/potential_model.hpp"
#include "quasiradial/radial_grid.hpp"

#include <vector>

namespace quasiradial {

class DiscreteFunctional {
 public:
  DiscreteFunctional(const RadialGrid& grid, const PotentialTable& table, const NonlinearitySpec& nl);

  std::size_t size() const { return n_; }
  const RadialGrid& grid() const { return grid_; }
  const NonlinearitySpec& nonlinearity() const { return nl_; }
  bool is_free(std::size_t i) const { return free_[i]; }
  const std::vector<bool>& free_mask() const { return free_; }

  /// ||u||^p, unregularized.
  double norm_p(const std::vector<double>& u) const;
  double energy(const std::vector<double>& u) const;
  /// Gradient of energy() with respect to the free nodal values.
  std::vector<double> gradient(const std::vector<double>& u) const;
  /// I'(u) applied to each hat function, unregularized.
  std::vector<double> weak_defect(const std::vector<double>& u) const;
  /// max_i |I'(u) phi_i| / ||phi_i|| over free nodes.
  double residual(const std::vector<double>& u) const;
  /// I'(u) u.
  double nehari_value(const std::vector<double>& u) const;
  /// Sum of w_i K_i f(u_i) u_i.
  double nonlinear_pairing(const std::vector<double>& u) const;
  /// t > 0 with I'(tu)(tu) = 0; throws NoProjection.
  double nehari_scale(const std::vector<double>& u) const;

  /// Solves P x = g with P the tridiagonal matrix of the quadratic form
  /// sum_j c_j A_j s_j |delta_j|^2 + sum_i w_i V_i m_i |u_i|^2, where the
  /// weights s_j, m_i freeze the p-Laplacian at u (all one when p = 2).
  std::vector<double> precondition(const std::vector<double>& u, const std::vector<double>& g) const;

  double slope(const std::vector<double>& u, std::size_t j) const { return (u[j + 1] - u[j]) / dr_[j]; }
  double epsilon(const std::vector<double>& u) const;

 private:
  const RadialGrid& grid_;
  NonlinearitySpec nl_;
  std::size_t n_;
  double p_;
  std::vector<double> dr_;   // r_{j+1} - r_j
  std::vector<double> ca_;   // c_j A_j
  std::vector<double> wv_;   // w_i V_i (0 at pinned nodes)
  std::vector<double> wk_;   // w_i K_i (0 at pinned nodes)
  std::vector<bool> free_;
};

double norm_X(const RadialFunction& u, const PotentialTable& table);
double energy_I(const RadialFunction& u, const PotentialTable& table, const NonlinearitySpec& nl);
RadialFunction grad_I(const RadialFunction& u, const PotentialTable& table, const NonlinearitySpec& nl);
double residual_weak_form(const RadialFunction& u, const PotentialTable& table, const NonlinearitySpec& nl);
double nehari_scale(const RadialFunction& u, const PotentialTable& table, const NonlinearitySpec& nl);

}  // namespace quasiradial
