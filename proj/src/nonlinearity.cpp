#include "quasiradial/nonlinearity.hpp"

#include "quasiradial/errors.hpp"
#include "quasiradial/json_number.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

namespace quasiradial {

namespace {

constexpr double kCheckTolerance = 1e-12;

double f_positive(const NonlinearitySpec& s, double t) {
  if (s.is_zero() || t == 0) return 0.0;
  switch (s.kind) {
    case NonlinearitySpec::Kind::pure_power:
      return std::pow(t, s.q1 - 1);
    case NonlinearitySpec::Kind::min_powers:
      if (s.q1 == s.q2) return std::pow(t, s.q1 - 1);
      return std::min(std::pow(t, s.q1 - 1), std::pow(t, s.q2 - 1));
    case NonlinearitySpec::Kind::rational:
      return std::pow(t, s.q2 - 1) / (1 + std::pow(t, s.q2 - s.q1));
  }
  return 0.0;
}

double F_positive(const NonlinearitySpec& s, double t) {
  if (s.is_zero() || t == 0) return 0.0;
  switch (s.kind) {
    case NonlinearitySpec::Kind::pure_power:
      return std::pow(t, s.q1) / s.q1;
    case NonlinearitySpec::Kind::min_powers: {
      if (s.q1 == s.q2) return std::pow(t, s.q1) / s.q1;
      // the larger exponent is active on (0, 1), the smaller one beyond
      const double hi = std::max(s.q1, s.q2), lo = std::min(s.q1, s.q2);
      if (t <= 1) return std::pow(t, hi) / hi;
      return 1 / hi - 1 / lo + std::pow(t, lo) / lo;
    }
    case NonlinearitySpec::Kind::rational: {
      if (s.q1 == s.q2) return std::pow(t, s.q1) / (2 * s.q1);
      using boost::math::quadrature::gauss_kronrod;
      auto f = [&s](double x) { return f_positive(s, x); };
      // split at 1 where the two regimes meet
      if (t <= 1) return gauss_kronrod<double, 15>::integrate(f, 0.0, t, 15, 1e-10);
      return gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, 15, 1e-10) +
             gauss_kronrod<double, 15>::integrate(f, 1.0, t, 15, 1e-10);
    }
  }
  return 0.0;
}

bool leq(double a, double b) { return a <= b + kCheckTolerance * (1 + std::abs(b)); }

}  // namespace

NonlinearitySpec NonlinearitySpec::min_powers(double q1, double q2) {
  return {Kind::min_powers, q1, q2, std::min(q1, q2), 1, 1};
}

NonlinearitySpec NonlinearitySpec::rational(double q1, double q2) {
  return {Kind::rational, q1, q2, std::min(q1, q2), 1, 1};
}

NonlinearitySpec NonlinearitySpec::pure_power(double q) { return {Kind::pure_power, q, q, q, 1, 1}; }

NonlinearitySpec NonlinearitySpec::zero(double q) { return {Kind::pure_power, q, q, q, 0, 1}; }

std::optional<std::pair<double, double>> NonlinearitySpec::homogeneous() const {
  if (is_zero()) return std::pair{0.0, q1};
  if (kind == Kind::pure_power || q1 == q2) return std::pair{kind == Kind::rational ? 0.5 : 1.0, q1};
  return std::nullopt;
}

const char* to_string(NonlinearitySpec::Kind kind) {
  switch (kind) {
    case NonlinearitySpec::Kind::min_powers: return "min_powers";
    case NonlinearitySpec::Kind::rational: return "rational";
    case NonlinearitySpec::Kind::pure_power: return "pure_power";
  }
  return "?";
}

nlohmann::json to_json(const NonlinearitySpec& spec) {
  nlohmann::json j{{"kind", to_string(spec.kind)}};
  if (spec.kind == NonlinearitySpec::Kind::pure_power) {
    j["q"] = spec.q1;
  } else {
    j["q1"] = spec.q1;
    j["q2"] = spec.q2;
  }
  j["theta"] = spec.theta;
  j["M"] = spec.M;
  j["t0"] = spec.t0;
  return j;
}

NonlinearitySpec nonlinearity_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("nonlinearity must be an object with a string 'kind'");
  const std::string kind = j["kind"];
  auto number = [&](const char* key) {
    if (!j.contains(key)) throw ConfigError("nonlinearity '" + kind + "' is missing '" + key + "'");
    return json_double(j[key]);
  };
  NonlinearitySpec spec;
  if (kind == "min_powers") {
    spec = NonlinearitySpec::min_powers(number("q1"), number("q2"));
  } else if (kind == "rational") {
    spec = NonlinearitySpec::rational(number("q1"), number("q2"));
  } else if (kind == "pure_power") {
    spec = NonlinearitySpec::pure_power(j.contains("q") ? number("q") : number("q1"));
  } else if (kind == "zero") {
    spec = NonlinearitySpec::zero(j.contains("q") ? number("q") : 2.0);
  } else {
    throw ConfigError("unknown nonlinearity kind '" + kind + "'");
  }
  if (j.contains("theta")) spec.theta = number("theta");
  if (j.contains("M")) spec.M = number("M");
  if (j.contains("t0")) spec.t0 = number("t0");
  if (!(spec.q1 > 1) || !(spec.q2 > 1) || !std::isfinite(spec.q1) || !std::isfinite(spec.q2))
    throw ConfigError("nonlinearity exponents must be finite and > 1");
  if (!(spec.M >= 0)) throw ConfigError("growth constant M must be >= 0");
  return spec;
}

double f_eval(const NonlinearitySpec& spec, double t) {
  return t < 0 ? -f_positive(spec, -t) : f_positive(spec, t);
}

double F_eval(const NonlinearitySpec& spec, double t) { return F_positive(spec, std::abs(t)); }

double f_solver(const NonlinearitySpec& spec, double t) { return t > 0 ? f_positive(spec, t) : 0.0; }

double F_solver(const NonlinearitySpec& spec, double t) { return t > 0 ? F_positive(spec, t) : 0.0; }

bool check_AR(const NonlinearitySpec& spec, const std::vector<double>& samples) {
  return std::all_of(samples.begin(), samples.end(), [&](double t) {
    return leq(spec.theta * F_positive(spec, t), f_positive(spec, t) * t);
  });
}

bool check_growth(const NonlinearitySpec& spec, const std::vector<double>& samples) {
  return std::all_of(samples.begin(), samples.end(), [&](double t) {
    const double f = f_positive(spec, t);
    const double bound = spec.M * std::min(std::pow(t, spec.q1 - 1), std::pow(t, spec.q2 - 1));
    return f >= 0 && leq(f, bound);
  });
}

}  // namespace quasiradial
