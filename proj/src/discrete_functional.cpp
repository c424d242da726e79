#include "quasiradial/discrete_functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quasiradial {

namespace {

// nodes whose weighted potential would overflow are pinned to zero
constexpr double kPinLog = 650.0;

double signed_pow(double x, double e) {
  // |x|^e sign(x), with 0 at x = 0
  if (x == 0) return 0.0;
  return std::copysign(std::pow(std::abs(x), e), x);
}

void check_table(const RadialGrid& grid, const PotentialTable& table) {
  if (table.size() != grid.size()) throw BadRange("potential table does not match the grid");
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (std::abs(table.radii[i] - grid.r[i]) > 1e-12 * grid.r[i])
      throw BadRange("potential table radii differ from the grid nodes");
}

}  // namespace

DiscreteFunctional::DiscreteFunctional(const RadialGrid& grid, const PotentialTable& table,
                                       const NonlinearitySpec& nl)
    : grid_(grid), nl_(nl), n_(grid.size()), p_(grid.dims.p) {
  check_table(grid, table);
  dr_.resize(n_ - 1);
  ca_.resize(n_ - 1);
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    dr_[j] = grid.r[j + 1] - grid.r[j];
    ca_[j] = grid.cells[j] * std::exp(0.5 * (table.log_A[j] + table.log_A[j + 1]));
  }
  wv_.assign(n_, 0.0);
  wk_.assign(n_, 0.0);
  free_.assign(n_, true);
  free_.back() = false;
  for (std::size_t i = 0; i < n_; ++i) {
    const double lw = std::log(grid.weights[i]);
    const double lv = lw + table.log_V[i];
    const double lk = lw + table.log_K[i];
    if (lv > kPinLog || lk > kPinLog) free_[i] = false;
    if (!free_[i]) continue;
    wv_[i] = std::exp(lv);
    wk_[i] = std::exp(lk);
  }
}

double DiscreteFunctional::epsilon(const std::vector<double>& u) const {
  double m = 0;
  for (std::size_t j = 0; j + 1 < n_; ++j) m = std::max(m, std::abs(slope(u, j)));
  return 1e-10 * m;
}

double DiscreteFunctional::norm_p(const std::vector<double>& u) const {
  long double s = 0;
  for (std::size_t j = 0; j + 1 < n_; ++j) s += ca_[j] * std::pow(std::abs(slope(u, j)), p_);
  for (std::size_t i = 0; i < n_; ++i)
    if (free_[i]) s += wv_[i] * std::pow(std::abs(u[i]), p_);
  return static_cast<double>(s);
}

double DiscreteFunctional::energy(const std::vector<double>& u) const {
  const double eps2 = std::pow(epsilon(u), 2);
  long double quad = 0, nonlinear = 0;
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    const double d = slope(u, j);
    quad += ca_[j] * std::pow(d * d + eps2, 0.5 * p_);
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (!free_[i]) continue;
    quad += wv_[i] * std::pow(std::abs(u[i]), p_);
    nonlinear += wk_[i] * F_solver(nl_, u[i]);
  }
  return static_cast<double>(quad / p_ - nonlinear);
}

std::vector<double> DiscreteFunctional::gradient(const std::vector<double>& u) const {
  const double eps2 = std::pow(epsilon(u), 2);
  std::vector<long double> g(n_, 0.0L);
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    const double d = slope(u, j);
    const double flux = ca_[j] * std::pow(d * d + eps2, 0.5 * (p_ - 2)) * d / dr_[j];
    g[j] -= flux;
    g[j + 1] += flux;
  }
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!free_[i]) continue;
    out[i] = static_cast<double>(g[i] + wv_[i] * signed_pow(u[i], p_ - 1) - wk_[i] * f_solver(nl_, u[i]));
  }
  return out;
}

std::vector<double> DiscreteFunctional::weak_defect(const std::vector<double>& u) const {
  std::vector<long double> g(n_, 0.0L);
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    const double flux = ca_[j] * signed_pow(slope(u, j), p_ - 1) / dr_[j];
    g[j] -= flux;
    g[j + 1] += flux;
  }
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!free_[i]) continue;
    out[i] = static_cast<double>(g[i] + wv_[i] * signed_pow(u[i], p_ - 1) - wk_[i] * f_solver(nl_, u[i]));
  }
  return out;
}

double DiscreteFunctional::residual(const std::vector<double>& u) const {
  const auto d = weak_defect(u);
  double worst = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!free_[i]) continue;
    long double phi = wv_[i];
    if (i > 0) phi += ca_[i - 1] / std::pow(dr_[i - 1], p_);
    if (i + 1 < n_) phi += ca_[i] / std::pow(dr_[i], p_);
    const double norm = std::pow(static_cast<double>(phi), 1.0 / p_);
    worst = std::max(worst, std::abs(d[i]) / norm);
  }
  return worst;
}

double DiscreteFunctional::nonlinear_pairing(const std::vector<double>& u) const {
  long double s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (free_[i]) s += wk_[i] * f_solver(nl_, u[i]) * u[i];
  return static_cast<double>(s);
}

double DiscreteFunctional::nehari_value(const std::vector<double>& u) const {
  const auto d = weak_defect(u);
  long double s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += static_cast<long double>(d[i]) * u[i];
  return static_cast<double>(s);
}

double DiscreteFunctional::nehari_scale(const std::vector<double>& u) const {
  const double np = norm_p(u);
  if (!(np > 0)) throw NoProjection("cannot project the zero function");
  if (const auto hom = nl_.homogeneous()) {
    const auto [c, q] = *hom;
    if (q == p_) throw NoProjection("nonlinearity is p-homogeneous; no Nehari scaling");
    long double s = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (free_[i] && u[i] > 0) s += wk_[i] * std::pow(u[i], q);
    const double denom = c * static_cast<double>(s);
    if (!(denom > 0)) throw NoProjection("nonlinear term vanishes along the ray");
    return std::exp((std::log(np) - std::log(denom)) / (q - p_));
  }

  // g(s) = log(int K f(e^s u) e^s u) - p s - log ||u||^p, increasing for
  // nonlinearities with f(t)/t^{p-1} increasing
  const double log_np = std::log(np);
  std::vector<double> scaled(u.size());
  auto g = [&](double s) {
    const double t = std::exp(s);
    for (std::size_t i = 0; i < u.size(); ++i) scaled[i] = t * u[i];
    const double pair = nonlinear_pairing(scaled);
    if (!(pair > 0)) return -std::numeric_limits<double>::infinity();
    return std::log(pair) - p_ * s - log_np;
  };
  double lo = 0, hi = 0;
  double g0 = g(0);
  if (g0 == 0) return 1.0;
  if (g0 < 0) {
    while (g(hi) < 0) {
      lo = hi;
      hi += 1;
      if (hi > 700) throw NoProjection("nonlinear term stays below the norm along the ray");
    }
  } else {
    while (g(lo) > 0) {
      hi = lo;
      lo -= 1;
      if (lo < -700) throw NoProjection("nonlinear term dominates the norm along the whole ray");
    }
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

std::vector<double> DiscreteFunctional::precondition(const std::vector<double>& u,
                                                     const std::vector<double>& g) const {
  const bool linear = p_ == 2.0;
  double max_d = 0, max_u = 0;
  for (std::size_t j = 0; j + 1 < n_; ++j) max_d = std::max(max_d, std::abs(slope(u, j)));
  for (double v : u) max_u = std::max(max_u, std::abs(v));
  const double eps = 1e-3 * max_d, floor_u = 1e-3 * max_u;

  std::vector<double> diag(n_, 0.0), off(n_ > 0 ? n_ - 1 : 0, 0.0);
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    double s = 1.0;
    if (!linear && max_d > 0) {
      const double d = slope(u, j);
      s = (p_ - 1) * std::pow(d * d + eps * eps, 0.5 * (p_ - 2));
    }
    const double k = ca_[j] * s / (dr_[j] * dr_[j]);
    diag[j] += k;
    diag[j + 1] += k;
    off[j] = -k;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    double m = 1.0;
    if (!linear && max_u > 0) m = (p_ - 1) * std::pow(std::max(std::abs(u[i]), floor_u), p_ - 2);
    diag[i] += wv_[i] * m;
  }
  std::vector<double> rhs(g);
  for (std::size_t i = 0; i < n_; ++i) {
    if (free_[i]) continue;
    diag[i] = 1.0;
    rhs[i] = 0.0;
    if (i > 0) off[i - 1] = 0.0;
    if (i + 1 < n_) off[i] = 0.0;
  }
  // Thomas algorithm
  std::vector<double> c(n_, 0.0), x(n_, 0.0);
  double denom = diag[0];
  c[0] = n_ > 1 ? off[0] / denom : 0.0;
  x[0] = rhs[0] / denom;
  for (std::size_t i = 1; i < n_; ++i) {
    denom = diag[i] - off[i - 1] * c[i - 1];
    if (i + 1 < n_) c[i] = off[i] / denom;
    x[i] = (rhs[i] - off[i - 1] * x[i - 1]) / denom;
  }
  for (std::size_t i = n_ - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

// ---------------------------------------------------------------------------

double norm_X(const RadialFunction& u, const PotentialTable& table) {
  const DiscreteFunctional F(*u.grid, table, NonlinearitySpec::zero());
  return std::pow(F.norm_p(u.values), 1.0 / u.grid->dims.p);
}

double energy_I(const RadialFunction& u, const PotentialTable& table, const NonlinearitySpec& nl) {
  return DiscreteFunctional(*u.grid, table, nl).energy(u.values);
}

RadialFunction grad_I(const RadialFunction& u, const PotentialTable& table, const NonlinearitySpec& nl) {
  return {u.grid, DiscreteFunctional(*u.grid, table, nl).gradient(u.values)};
}

double residual_weak_form(const RadialFunction& u, const PotentialTable& table, const NonlinearitySpec& nl) {
  return DiscreteFunctional(*u.grid, table, nl).residual(u.values);
}

double nehari_scale(const RadialFunction& u, const PotentialTable& table, const NonlinearitySpec& nl) {
  return DiscreteFunctional(*u.grid, table, nl).nehari_scale(u.values);
}

}  // namespace quasiradial
