#include "quasiradial/potential_model.hpp"

#include "quasiradial/json_number.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace quasiradial {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTrendTolerance = 1e-6;
constexpr double kRefineTolerance = 1e-3;

using nlohmann::json;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// least-squares slope of y against x
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
  return sxx > 0 ? sxy / sxx : 0.0;
}

double log_sum_exp(const std::vector<double>& v) {
  double m = kNegInf;
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// Sampled log-quantity over an open interval, with a log-radius coordinate.
struct Sample {
  std::vector<double> log_r;
  std::vector<double> log_q;
  std::vector<std::size_t> index;
};

template <typename F>
Sample collect(const PotentialTable& table, double r_lo, double r_hi, F&& log_quantity) {
  Sample s;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double r = table.radii[i];
    if (!(r_lo < r && r < r_hi)) continue;
    s.log_r.push_back(std::log(r));
    s.log_q.push_back(log_quantity(i));
    s.index.push_back(i);
  }
  if (s.log_r.empty()) throw InsufficientRange("no sampled radii inside (" + fmt(r_lo) + ", " + fmt(r_hi) + ")");
  return s;
}

// Slopes of log quantity over the first and last decade of the sample when
// the interval reaches past the table.
std::pair<std::optional<double>, std::optional<double>> end_slopes(const PotentialTable& table,
                                                                   const Sample& s, double r_lo,
                                                                   double r_hi) {
  const double ln10 = std::log(10.0);
  std::optional<double> origin, infinity;
  auto slope_where = [&](auto pred) -> std::optional<double> {
    std::vector<double> x, y;
    for (std::size_t k = 0; k < s.log_r.size(); ++k) {
      if (!pred(s.log_r[k]) || !std::isfinite(s.log_q[k])) continue;
      x.push_back(s.log_r[k]);
      y.push_back(s.log_q[k]);
    }
    if (x.size() < 3) return std::nullopt;
    return ls_slope(x, y);
  };
  if (r_lo <= table.radii.front()) {
    const double edge = s.log_r.front() + ln10;
    origin = slope_where([&](double lr) { return lr <= edge; });
  }
  if (r_hi >= table.radii.back()) {
    const double edge = s.log_r.back() - ln10;
    infinity = slope_where([&](double lr) { return lr >= edge; });
  }
  return {origin, infinity};
}

}  // namespace

// ---------------------------------------------------------------------------
// PotentialSpec

PotentialSpec PotentialSpec::power(double c, double e) {
  PotentialSpec s;
  s.kind = Kind::power;
  s.c = c;
  s.e = e;
  return s;
}

PotentialSpec PotentialSpec::exponential_inv(double scale, double c) {
  PotentialSpec s;
  s.kind = Kind::exponential_inv;
  s.scale = scale;
  s.c = c;
  return s;
}

PotentialSpec PotentialSpec::constant(double c) {
  PotentialSpec s;
  s.kind = Kind::constant;
  s.c = c;
  return s;
}

PotentialSpec PotentialSpec::min_of(std::vector<PotentialSpec> args) {
  PotentialSpec s;
  s.kind = Kind::min;
  s.args = std::move(args);
  return s;
}

PotentialSpec PotentialSpec::max_of(std::vector<PotentialSpec> args) {
  PotentialSpec s;
  s.kind = Kind::max;
  s.args = std::move(args);
  return s;
}

PotentialSpec PotentialSpec::piecewise(double breakpoint, PotentialSpec inner, PotentialSpec outer) {
  PotentialSpec s;
  s.kind = Kind::piecewise;
  s.breakpoint = breakpoint;
  s.args = {std::move(inner), std::move(outer)};
  return s;
}

double PotentialSpec::log_value(double r) const {
  switch (kind) {
    case Kind::power:
      return c > 0 ? std::log(c) + e * std::log(r) : kNegInf;
    case Kind::exponential_inv:
      return c > 0 ? std::log(c) + scale / r : kNegInf;
    case Kind::constant:
      return c > 0 ? std::log(c) : kNegInf;
    case Kind::min: {
      double out = std::numeric_limits<double>::infinity();
      for (const auto& a : args) out = std::min(out, a.log_value(r));
      return out;
    }
    case Kind::max: {
      double out = kNegInf;
      for (const auto& a : args) out = std::max(out, a.log_value(r));
      return out;
    }
    case Kind::piecewise:
      return r < breakpoint ? args[0].log_value(r) : args[1].log_value(r);
  }
  return kNegInf;
}

double PotentialSpec::value(double r) const { return std::exp(log_value(r)); }

void PotentialSpec::validate() const {
  switch (kind) {
    case Kind::power:
      if (!std::isfinite(e)) throw InvalidPotential("power exponent must be finite");
      [[fallthrough]];
    case Kind::constant:
      if (!std::isfinite(c) || c < 0) throw InvalidPotential("coefficient must be finite and >= 0");
      return;
    case Kind::exponential_inv:
      if (!std::isfinite(c) || c < 0) throw InvalidPotential("coefficient must be finite and >= 0");
      if (!std::isfinite(scale)) throw InvalidPotential("exponential scale must be finite");
      return;
    case Kind::min:
    case Kind::max:
      if (args.empty()) throw InvalidPotential("min/max needs at least one argument");
      for (const auto& a : args) a.validate();
      return;
    case Kind::piecewise:
      if (args.size() != 2) throw InvalidPotential("piecewise needs inner and outer pieces");
      if (!(breakpoint > 0) || !std::isfinite(breakpoint))
        throw InvalidPotential("piecewise breakpoint must be positive");
      args[0].validate();
      args[1].validate();
      return;
  }
}

json to_json(const PotentialSpec& spec) {
  using Kind = PotentialSpec::Kind;
  switch (spec.kind) {
    case Kind::power: return json{{"kind", "power"}, {"c", spec.c}, {"e", spec.e}};
    case Kind::exponential_inv:
      return json{{"kind", "exponential_inv"}, {"scale", spec.scale}, {"c", spec.c}};
    case Kind::constant: return json{{"kind", "constant"}, {"c", spec.c}};
    case Kind::min:
    case Kind::max: {
      json args = json::array();
      for (const auto& a : spec.args) args.push_back(to_json(a));
      return json{{"kind", spec.kind == Kind::min ? "min" : "max"}, {"args", args}};
    }
    case Kind::piecewise:
      return json{{"kind", "piecewise"},
                  {"r", spec.breakpoint},
                  {"inner", to_json(spec.args[0])},
                  {"outer", to_json(spec.args[1])}};
  }
  return json{};
}

PotentialSpec potential_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidPotential("potential must be an object with a string 'kind'");
  const std::string kind = j["kind"];
  auto number = [&](const char* key, std::optional<double> fallback = std::nullopt) {
    if (!j.contains(key)) {
      if (fallback) return *fallback;
      throw InvalidPotential("potential '" + kind + "' is missing '" + key + "'");
    }
    try {
      return json_double(j[key]);
    } catch (const ConfigError& e) {
      throw InvalidPotential(e.what());
    }
  };
  PotentialSpec spec;
  if (kind == "power") {
    spec = PotentialSpec::power(number("c", 1.0), number("e"));
  } else if (kind == "exponential_inv") {
    spec = PotentialSpec::exponential_inv(number("scale", 1.0), number("c", 1.0));
  } else if (kind == "constant") {
    spec = PotentialSpec::constant(number("c"));
  } else if (kind == "min" || kind == "max") {
    if (!j.contains("args") || !j["args"].is_array())
      throw InvalidPotential("'" + kind + "' needs an 'args' array");
    std::vector<PotentialSpec> args;
    for (const auto& a : j["args"]) args.push_back(potential_from_json(a));
    spec = kind == "min" ? PotentialSpec::min_of(std::move(args)) : PotentialSpec::max_of(std::move(args));
  } else if (kind == "piecewise") {
    if (!j.contains("inner") || !j.contains("outer"))
      throw InvalidPotential("piecewise needs 'inner' and 'outer'");
    spec = PotentialSpec::piecewise(number("r"), potential_from_json(j["inner"]),
                                    potential_from_json(j["outer"]));
  } else {
    throw InvalidPotential("unknown potential kind '" + kind + "'");
  }
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------
// Tables

const std::vector<double>& PotentialTable::log_values(Which which) const {
  switch (which) {
    case Which::A: return log_A;
    case Which::V: return log_V;
    case Which::K: return log_K;
  }
  return log_A;
}

double PotentialTable::value_A(std::size_t i) const { return std::exp(log_A[i]); }
double PotentialTable::value_V(std::size_t i) const { return std::exp(log_V[i]); }
double PotentialTable::value_K(std::size_t i) const { return std::exp(log_K[i]); }

std::vector<double> log_spaced_radii(double r_lo, double r_hi, int per_decade) {
  if (!(r_lo > 0) || !(r_lo < r_hi) || per_decade < 1)
    throw BadRange("radii need 0 < r_lo < r_hi and a positive density");
  const double decades = std::log10(r_hi / r_lo);
  const auto cells = static_cast<std::size_t>(std::max(1.0, std::ceil(decades * per_decade - 1e-9)));
  std::vector<double> radii(cells + 1);
  const double lo = std::log(r_lo), hi = std::log(r_hi);
  for (std::size_t i = 0; i <= cells; ++i)
    radii[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells));
  radii.front() = r_lo;
  radii.back() = r_hi;
  return radii;
}

PotentialTable eval_potentials(const PotentialSpec& A, const PotentialSpec& V, const PotentialSpec& K,
                               const std::vector<double>& radii) {
  return eval_potentials(PotentialSet{A, V, K}, radii);
}

PotentialTable eval_potentials(const PotentialSet& set, const std::vector<double>& radii) {
  set.A.validate();
  set.V.validate();
  set.K.validate();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0) || (i > 0 && !(radii[i - 1] < radii[i])))
      throw BadRange("radii must be positive and strictly increasing");
  }
  PotentialTable t;
  t.radii = radii;
  t.source = set;
  t.log_A.resize(radii.size());
  t.log_V.resize(radii.size());
  t.log_K.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    t.log_A[i] = set.A.log_value(r);
    t.log_V[i] = set.V.log_value(r);
    t.log_K[i] = set.K.log_value(r);
    if (!std::isfinite(t.log_A[i]) || std::isnan(t.log_A[i]))
      throw NonPositive("A is not positive and finite at r = " + fmt(r));
    if (!std::isfinite(t.log_K[i]) || std::isnan(t.log_K[i]))
      throw NonPositive("K is not positive and finite at r = " + fmt(r));
    if (std::isnan(t.log_V[i]) || t.log_V[i] == std::numeric_limits<double>::infinity())
      throw NonPositive("V is not finite at r = " + fmt(r));
  }
  return t;
}

LimitExponent estimate_limit_exponent(const PotentialTable& table, Which which, End end) {
  if (table.size() < 3 || table.radii.back() / table.radii.front() < 1e3 * (1 - 1e-12))
    throw InsufficientRange("limit exponent needs at least three decades of radii");
  const auto& lv = table.log_values(which);
  std::vector<double> x, y;
  if (end == End::origin) {
    const double edge = table.radii.front() * 10.0 * (1 + 1e-12);
    for (std::size_t i = 0; i < table.size() && table.radii[i] <= edge; ++i) {
      x.push_back(std::log(table.radii[i]));
      y.push_back(lv[i]);
    }
  } else {
    const double edge = table.radii.back() / 10.0 * (1 - 1e-12);
    for (std::size_t i = table.size(); i-- > 0 && table.radii[i] >= edge;) {
      x.push_back(std::log(table.radii[i]));
      y.push_back(lv[i]);
    }
  }
  for (double v : y)
    if (!std::isfinite(v)) throw InsufficientRange("potential vanishes on the extreme decade");
  const double slope = ls_slope(x, y);
  double c_lo = std::numeric_limits<double>::infinity(), c_hi = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double c = std::exp(y[k] - slope * x[k]);
    c_lo = std::min(c_lo, c);
    c_hi = std::max(c_hi, c);
  }
  return {slope, c_lo, c_hi};
}

const char* to_string(AsymptoticBound::Quantity q) {
  switch (q) {
    case AsymptoticBound::Quantity::esssup_K_over_r_alpha_V_beta: return "esssup_K_over_r_alpha_V_beta";
    case AsymptoticBound::Quantity::essinf_r_gamma_V: return "essinf_r_gamma_V";
    case AsymptoticBound::Quantity::ratio_A_over_r_alpha: return "ratio_A_over_r_alpha";
  }
  return "?";
}

namespace {

// Extremum of a log quantity over (r_lo, r_hi), with one full dyadic
// refinement through the source specs when available.
template <typename TableQ, typename SpecQ>
AsymptoticBound extremum(const PotentialTable& table, double r_lo, double r_hi, bool sup,
                         AsymptoticBound::Quantity quantity, TableQ&& table_q, SpecQ&& spec_q) {
  const Sample s = collect(table, r_lo, r_hi, table_q);
  auto better = [sup](double a, double b) { return sup ? a > b : a < b; };
  double coarse = s.log_q.front();
  for (double v : s.log_q)
    if (better(v, coarse)) coarse = v;

  AsymptoticBound b{quantity, r_lo, r_hi, 0.0, coarse, static_cast<int>(s.log_q.size()), false, 0.0};
  if (table.source) {
    double fine = coarse;
    int added = 0;
    auto consider = [&](double r) {
      if (!(r_lo < r && r < r_hi)) return;
      const double v = spec_q(*table.source, r);
      ++added;
      if (better(v, fine)) fine = v;
    };
    for (std::size_t k = 0; k < s.index.size(); ++k) {
      const std::size_t i = s.index[k];
      if (i > 0) consider(std::sqrt(table.radii[i - 1] * table.radii[i]));
      if (i + 1 < table.size() && (k + 1 == s.index.size()))
        consider(std::sqrt(table.radii[i] * table.radii[i + 1]));
    }
    const double diff = fine - coarse;
    b.converged = (std::isinf(coarse) && coarse == fine) || std::abs(std::expm1(diff)) < kRefineTolerance;
    if (std::isnan(diff)) b.converged = false;
    b.log_value = fine;
    b.grid_points += added;
  }
  b.value = std::exp(b.log_value);

  const auto [origin, infinity] = end_slopes(table, s, r_lo, r_hi);
  double growth = 0.0;
  if (sup) {
    if (origin) growth = std::max(growth, -*origin);
    if (infinity) growth = std::max(growth, *infinity);
  } else {
    if (origin) growth = std::min(growth, -*origin);
    if (infinity) growth = std::min(growth, *infinity);
  }
  b.open_end_growth = growth;
  return b;
}

}  // namespace

AsymptoticBound esssup_ratio(const PotentialTable& table, double alpha, double beta, double r_lo,
                             double r_hi) {
  const bool use_v = beta != 0.0;
  auto table_q = [&](std::size_t i) {
    const double r = table.radii[i];
    double v = table.log_K[i] - alpha * std::log(r);
    if (use_v) {
      if (!std::isfinite(table.log_V[i]))
        throw DivisionByZeroV("V vanishes at r = " + fmt(r) + " while beta > 0");
      v -= beta * table.log_V[i];
    }
    return v;
  };
  auto spec_q = [&](const PotentialSet& set, double r) {
    double v = set.K.log_value(r) - alpha * std::log(r);
    if (use_v) {
      const double lv = set.V.log_value(r);
      if (!std::isfinite(lv)) throw DivisionByZeroV("V vanishes at r = " + fmt(r) + " while beta > 0");
      v -= beta * lv;
    }
    return v;
  };
  return extremum(table, r_lo, r_hi, true, AsymptoticBound::Quantity::esssup_K_over_r_alpha_V_beta,
                  table_q, spec_q);
}

AsymptoticBound essinf_weighted(const PotentialTable& table, double gamma, double r_lo, double r_hi) {
  auto table_q = [&](std::size_t i) { return gamma * std::log(table.radii[i]) + table.log_V[i]; };
  auto spec_q = [&](const PotentialSet& set, double r) { return gamma * std::log(r) + set.V.log_value(r); };
  return extremum(table, r_lo, r_hi, false, AsymptoticBound::Quantity::essinf_r_gamma_V, table_q, spec_q);
}

// ---------------------------------------------------------------------------
// Hypotheses

bool HypothesisReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const HypothesisCheck& c) { return c.passed || !c.gating; });
}

namespace {

// log of the integral of exp(log_f) r^{N-1} dr over r in [lo, hi], by the
// trapezoid rule in log r.
double log_weighted_integral(const PotentialTable& table, const std::vector<double>& log_f, int N,
                             std::size_t lo, std::size_t hi) {
  std::vector<double> terms;
  for (std::size_t i = lo; i < hi; ++i) {
    const double h = std::log(table.radii[i + 1] / table.radii[i]);
    const double g0 = log_f[i] + N * std::log(table.radii[i]);
    const double g1 = log_f[i + 1] + N * std::log(table.radii[i + 1]);
    terms.push_back(std::log(0.5 * h) + g0);
    terms.push_back(std::log(0.5 * h) + g1);
  }
  return log_sum_exp(terms);
}

HypothesisCheck compact_integrability(const PotentialTable& table, const std::vector<double>& log_f,
                                      int N, const std::string& name, const std::string& what) {
  HypothesisCheck c{name, true, true, false, "", std::nullopt};
  std::size_t start = 0;
  int decades = 0;
  double worst = kNegInf;
  while (start + 1 < table.size()) {
    std::size_t end = start;
    while (end + 1 < table.size() && table.radii[end + 1] <= table.radii[start] * 10.0 * (1 + 1e-12)) ++end;
    if (end == start) ++end;
    const double li = log_weighted_integral(table, log_f, N, start, end);
    if (std::isnan(li) || li == std::numeric_limits<double>::infinity()) c.passed = false;
    worst = std::max(worst, li);
    ++decades;
    start = end;
  }
  c.detail = what + " finite on each of " + std::to_string(decades) +
             " sampled decades; largest log-integral " + fmt(worst);
  return c;
}

}  // namespace

HypothesisReport validate_hypotheses(const PotentialSet& specs, const ProblemDims<double>& dims,
                                     const EndpointAsymptotics<double>& origin,
                                     const EndpointAsymptotics<double>& infinity,
                                     const ValidationOptions& options) {
  HypothesisReport report;
  auto add = [&](HypothesisCheck c) { report.checks.push_back(std::move(c)); };

  try {
    dims.validate();
    add({"dims", true, true, false, "N = " + std::to_string(dims.N) + ", p = " + fmt(dims.p), std::nullopt});
  } catch (const Error& e) {
    add({"dims", false, true, false, e.what(), std::nullopt});
    return report;
  }

  const double p = dims.p;
  const double N = dims.N;
  for (const auto* asym : {&origin, &infinity}) {
    const std::string end = to_string(asym->end);
    const bool in_range = p - N < asym->a && asym->a <= p;
    add({"A_exponent_range_" + end, in_range, true, false,
         "a = " + fmt(asym->a) + (in_range ? " lies in " : " is outside ") + "(" + fmt(p - N) + ", " + fmt(p) + "]",
         std::nullopt});
    try {
      validate(*asym, dims);
      add({"asymptotics_" + end, true, true, false, "exponent data consistent", std::nullopt});
    } catch (const Error& e) {
      add({"asymptotics_" + end, false, true, false, e.what(), std::nullopt});
    }
  }

  PotentialTable table;
  try {
    table = eval_potentials(specs, log_spaced_radii(options.r_lo, options.r_hi, options.per_decade));
    add({"positivity", true, true, false, "A > 0, K > 0, V >= 0 at all sampled radii", std::nullopt});
  } catch (const Error& e) {
    add({"positivity", false, true, false, e.what(), std::nullopt});
    return report;
  }

  for (const auto* asym : {&origin, &infinity}) {
    const std::string end = to_string(asym->end);
    HypothesisCheck c{"A_asymptotic_" + end, false, true, true, "", std::nullopt};
    try {
      const auto est = estimate_limit_exponent(table, Which::A, asym->end);
      c.passed = std::abs(est.exponent - asym->a) <= options.exponent_tolerance && est.c_lo > 0 &&
                 std::isfinite(est.c_hi);
      c.detail = "estimated exponent " + fmt(est.exponent) + " vs declared " + fmt(asym->a) +
                 "; A/r^a in [" + fmt(est.c_lo) + ", " + fmt(est.c_hi) + "]";
    } catch (const Error& e) {
      c.detail = e.what();
    }
    add(c);
  }

  const double inf = std::numeric_limits<double>::infinity();
  struct Range {
    const EndpointAsymptotics<double>* asym;
    double lo, hi;
  };
  for (const Range& rg : {Range{&origin, 0.0, origin.R}, Range{&infinity, infinity.R, inf}}) {
    const std::string end = to_string(rg.asym->end);
    HypothesisCheck sup{"esssup_K_" + end, false, true, true, "", std::nullopt};
    try {
      const auto b = esssup_ratio(table, rg.asym->alpha, rg.asym->beta, rg.lo, rg.hi);
      sup.passed = std::isfinite(b.log_value) && b.open_end_growth <= kTrendTolerance;
      sup.detail = "log esssup K/(r^alpha V^beta) = " + fmt(b.log_value) + ", growth toward open end " +
                   fmt(b.open_end_growth);
      sup.bound = b;
    } catch (const Error& e) {
      sup.detail = e.what();
    }
    add(sup);

    HypothesisCheck low{"essinf_V_" + end, false, true, true, "", std::nullopt};
    try {
      const auto b = essinf_weighted(table, rg.asym->gamma, rg.lo, rg.hi);
      low.passed = std::isfinite(b.log_value) && b.open_end_growth >= -kTrendTolerance;
      low.detail = "log essinf r^gamma V = " + fmt(b.log_value) + ", growth toward open end " +
                   fmt(b.open_end_growth);
      low.bound = b;
    } catch (const Error& e) {
      low.detail = e.what();
    }
    add(low);
  }

  add(compact_integrability(table, table.log_V, dims.N, "V_L1_loc", "integral of V r^{N-1}"));
  std::vector<double> log_Ks(table.log_K);
  for (double& v : log_Ks) v *= options.s;
  add(compact_integrability(table, log_Ks, dims.N, "K_Ls_loc",
                            "integral of K^s r^{N-1} with s = " + fmt(options.s)));

  {
    // V r^N near the origin tending to zero like a power means V r^{N-1} is
    // integrable at 0; informational only.
    HypothesisCheck c{"V_weighted_integrable_near_origin", false, false, true, "", std::nullopt};
    std::vector<double> x, y;
    const double edge = table.radii.front() * 10.0 * (1 + 1e-12);
    bool vanishes = false;
    for (std::size_t i = 0; i < table.size() && table.radii[i] <= edge; ++i) {
      if (!std::isfinite(table.log_V[i])) {
        vanishes = true;
        continue;
      }
      x.push_back(std::log(table.radii[i]));
      y.push_back(table.log_V[i] + N * std::log(table.radii[i]));
    }
    if (x.size() < 3) {
      c.passed = vanishes;
      c.detail = vanishes ? "V vanishes near the origin" : "too few samples near the origin";
    } else {
      const double slope = ls_slope(x, y);
      c.passed = slope > kTrendTolerance;
      c.detail = "log-slope of V r^N over the innermost decade " + fmt(slope);
    }
    add(c);
  }
  return report;
}

void write_table_csv(const PotentialTable& table, std::ostream& out) {
  out << "r,A,V,K\n";
  char buf[128];
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", table.radii[i], table.value_A(i),
                  table.value_V(i), table.value_K(i));
    out << buf;
  }
}

}  // namespace quasiradial
