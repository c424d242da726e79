#pragma once

// Radial potentials A, V, K as expression trees, sampled tables in log space,
// and numeric checks of the growth and integrability hypotheses.

#include "quasiradial/exponent_calculus.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quasiradial {

/// Expression tree for a radial function r -> value on (0, inf).
/// Values are evaluated as logarithms so that e^{1/r} near the origin does
/// not overflow; a zero value has log -inf.
struct PotentialSpec {
  enum class Kind { power, exponential_inv, min, max, piecewise, constant };

  Kind kind = Kind::constant;
  double c = 1.0;         // power, exponential_inv, constant
  double e = 0.0;         // power: c r^e
  double scale = 1.0;     // exponential_inv: c e^{scale/r}
  double breakpoint = 1;  // piecewise: args[0] for r < breakpoint, args[1] otherwise
  std::vector<PotentialSpec> args;

  static PotentialSpec power(double c, double e);
  static PotentialSpec exponential_inv(double scale, double c = 1.0);
  static PotentialSpec constant(double c);
  static PotentialSpec min_of(std::vector<PotentialSpec> args);
  static PotentialSpec max_of(std::vector<PotentialSpec> args);
  static PotentialSpec piecewise(double breakpoint, PotentialSpec inner, PotentialSpec outer);

  double log_value(double r) const;
  double value(double r) const;

  /// Throws InvalidPotential on negative coefficients or malformed trees.
  void validate() const;
};

nlohmann::json to_json(const PotentialSpec& spec);
PotentialSpec potential_from_json(const nlohmann::json& j);

struct PotentialSet {
  PotentialSpec A;
  PotentialSpec V;
  PotentialSpec K;
};

enum class Which { A, V, K };

/// Sampled potentials. Values are kept as natural logarithms; use the value_*
/// accessors for plain values (which may overflow to +inf).
struct PotentialTable {
  std::vector<double> radii;
  std::vector<double> log_A;
  std::vector<double> log_V;
  std::vector<double> log_K;
  int refinement_level = 0;
  std::optional<PotentialSet> source;

  std::size_t size() const { return radii.size(); }
  const std::vector<double>& log_values(Which which) const;
  double value_A(std::size_t i) const;
  double value_V(std::size_t i) const;
  double value_K(std::size_t i) const;
};

/// Log-uniform radii with per_decade points per factor 10, endpoints included.
std::vector<double> log_spaced_radii(double r_lo = 1e-6, double r_hi = 1e6, int per_decade = 256);

/// Throws NonPositive if A or K is not strictly positive at some radius.
PotentialTable eval_potentials(const PotentialSpec& A, const PotentialSpec& V, const PotentialSpec& K,
                               const std::vector<double>& radii);
PotentialTable eval_potentials(const PotentialSet& set, const std::vector<double>& radii);

struct LimitExponent {
  double exponent;
  double c_lo;  // min of value / r^exponent over the extreme decade
  double c_hi;  // max of the same
};

/// Log-log least-squares slope over the decade of the table closest to `end`.
LimitExponent estimate_limit_exponent(const PotentialTable& table, Which which, End end);

struct AsymptoticBound {
  enum class Quantity { esssup_K_over_r_alpha_V_beta, essinf_r_gamma_V, ratio_A_over_r_alpha };

  Quantity quantity;
  double r_lo;
  double r_hi;
  double value;
  double log_value;
  int grid_points;
  bool converged;
  /// Growth rate of log(quantity) per unit log r toward an unbounded end of
  /// the interval (0 when the interval sits inside the table); a positive
  /// rate for a sup, or a negative one for an inf, means the sampled extremum
  /// is probably not the true one.
  double open_end_growth;
};

const char* to_string(AsymptoticBound::Quantity q);

/// Grid maximum of K / (r^alpha V^beta) over the sampled points with
/// r_lo < r < r_hi. V^0 is taken as 1 even where V vanishes.
AsymptoticBound esssup_ratio(const PotentialTable& table, double alpha, double beta, double r_lo,
                             double r_hi);

/// Grid minimum of r^gamma V(r) over r_lo < r < r_hi.
AsymptoticBound essinf_weighted(const PotentialTable& table, double gamma, double r_lo, double r_hi);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  bool gating = true;
  bool heuristic = false;
  std::string detail;
  std::optional<AsymptoticBound> bound;
};

struct HypothesisReport {
  std::vector<HypothesisCheck> checks;
  bool all_passed() const;
};

struct ValidationOptions {
  double r_lo = 1e-6;
  double r_hi = 1e6;
  int per_decade = 256;
  double s = 2.0;                   // exponent for K in L^s_loc
  double exponent_tolerance = 1e-2;  // declared vs estimated exponent of A
};

HypothesisReport validate_hypotheses(const PotentialSet& specs, const ProblemDims<double>& dims,
                                     const EndpointAsymptotics<double>& origin,
                                     const EndpointAsymptotics<double>& infinity,
                                     const ValidationOptions& options = {});

/// CSV with header r,A,V,K.
void write_table_csv(const PotentialTable& table, std::ostream& out);

}  // namespace quasiradial
