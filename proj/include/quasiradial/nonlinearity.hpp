#pragma once

// Model nonlinearities f and their primitives F(t) = int_0^t f.

#include <json.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace quasiradial {

/// min_powers:  f(t) = min{|t|^{q1-2} t, |t|^{q2-2} t}
/// rational:    f(t) = |t|^{q2-2} t / (1 + |t|^{q2-q1})
/// pure_power:  f(t) = |t|^{q-2} t with q = q1 = q2
/// A growth constant M = 0 denotes f identically zero.
struct NonlinearitySpec {
  enum class Kind { min_powers, rational, pure_power };

  Kind kind = Kind::pure_power;
  double q1 = 2;
  double q2 = 2;
  double theta = 2;  // Ambrosetti-Rabinowitz exponent
  double M = 1;      // growth constant in f <= M min{t^{q1-1}, t^{q2-1}}
  double t0 = 1;     // F(t0) > 0

  static NonlinearitySpec min_powers(double q1, double q2);
  static NonlinearitySpec rational(double q1, double q2);
  static NonlinearitySpec pure_power(double q);
  static NonlinearitySpec zero(double q = 2);

  bool is_zero() const { return M == 0; }

  /// (c, q) with f(t) = c t^{q-1} on t >= 0, when f is a single power.
  std::optional<std::pair<double, double>> homogeneous() const;
};

const char* to_string(NonlinearitySpec::Kind kind);

nlohmann::json to_json(const NonlinearitySpec& spec);
/// Throws ConfigError.
NonlinearitySpec nonlinearity_from_json(const nlohmann::json& j);

/// Odd extension to t < 0.
double f_eval(const NonlinearitySpec& spec, double t);
double F_eval(const NonlinearitySpec& spec, double t);

/// Zero extension to t < 0, as used by the solver.
double f_solver(const NonlinearitySpec& spec, double t);
double F_solver(const NonlinearitySpec& spec, double t);

/// theta F(t) <= f(t) t at every sample, up to 1e-12 relative plus absolute.
bool check_AR(const NonlinearitySpec& spec, const std::vector<double>& samples);

/// 0 <= f(t) <= M min{t^{q1-1}, t^{q2-1}} at every sample, same tolerance.
bool check_growth(const NonlinearitySpec& spec, const std::vector<double>& samples);

}  // namespace quasiradial
