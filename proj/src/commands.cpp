#include "quasiradial/commands.hpp"

#include "quasiradial/embedding_probe.hpp"
#include "quasiradial/json_writer.hpp"
#include "quasiradial/radial_solver.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace quasiradial {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson ord(const json& j) { return ojson::parse(j.dump()); }

void put(ojson& j, const std::string& key, const Rational& x) {
  j[key] = to_double(x);
  j[key + "_exact"] = to_string(x);
}

void put(ojson& j, const std::string& key, const std::optional<Rational>& x) {
  if (x) {
    put(j, key, *x);
  } else {
    j[key] = nullptr;
    j[key + "_exact"] = nullptr;
  }
}

ojson header(const std::string& command, const RunConfig* config) {
  ojson j;
  j["schema_version"] = 1;
  j["command"] = command;
  if (config) j["dims"] = ojson{{"N", config->dims_exact.N}, {"p", to_string(config->dims_exact.p)}};
  return j;
}

ojson critical_json(const EndpointAsymptotics<Rational>& a, const ProblemDims<Rational>& dims) {
  const auto c = critical_exponents(a, dims);
  ojson j;
  put(j, "q_star", c.q_star);
  put(j, "q_double_star", c.q_double_star);
  put(j, "alpha1", c.alpha1);
  put(j, "alpha2", c.alpha2);
  put(j, "alpha3", c.alpha3);
  put(j, "p_sobolev", c.p_sobolev);
  return j;
}

ojson interval_json(const AdmissibleSet<Rational>& s) {
  ojson j;
  put(j, "lower", s.lower);
  put(j, "upper", s.upper);
  j["upper_infinite"] = !s.upper.has_value();
  j["empty"] = s.empty();
  return j;
}

ojson alpha_constraints_json(const AdmissibleSet<Rational>& s) {
  ojson arr = ojson::array();
  if (s.alpha_constraint) {
    ojson c;
    c["kind"] = to_string(s.alpha_constraint->kind);
    put(c, "bound", s.alpha_constraint->bound);
    c["satisfied"] = s.alpha_constraint->satisfied;
    arr.push_back(c);
  }
  return arr;
}

// exponents of the configured nonlinearity sorted ascending
struct ConfiguredExponents {
  Rational q1, q2;
  bool swapped;
};

std::optional<ConfiguredExponents> configured_exponents(const RunConfig& c) {
  if (!c.q1_exact || !c.q2_exact) return std::nullopt;
  if (*c.q2_exact < *c.q1_exact) return ConfiguredExponents{*c.q2_exact, *c.q1_exact, true};
  return ConfiguredExponents{*c.q1_exact, *c.q2_exact, false};
}

struct RegionSummary {
  ojson doc;
  std::optional<bool> admissible;
};

RegionSummary region_summary(const RunConfig& c) {
  const auto& dims = c.dims_exact;
  validate(c.origin_exact, dims);
  validate(c.infinity_exact, dims);
  const auto set = q1_admissible_set(c.origin_exact, dims);
  const Rational q2_bound = q2_lower_bound(c.infinity_exact, dims);

  ojson j;
  j["q1_interval"] = interval_json(set);
  j["q1_alpha_constraints"] = alpha_constraints_json(set);
  put(j, "q2_lower_bound", q2_bound);

  ojson origin;
  origin["asymptotics"] = ord(asymptotics_to_json(c.origin_exact));
  origin["branch"] = to_string(set.branch);
  origin["critical"] = critical_json(c.origin_exact, dims);
  put(origin, "pointwise_decay_exponent", pointwise_decay_exponent(c.origin_exact, dims));
  ojson infinity;
  infinity["asymptotics"] = ord(asymptotics_to_json(c.infinity_exact));
  infinity["critical"] = critical_json(c.infinity_exact, dims);
  put(infinity, "pointwise_decay_exponent", pointwise_decay_exponent(c.infinity_exact, dims));

  RegionSummary out;
  const auto q = configured_exponents(c);
  if (q) {
    ojson cfg;
    put(cfg, "q1", q->q1);
    put(cfg, "q2", q->q2);
    cfg["swapped"] = q->swapped;
    const bool above_p = dims.p < q->q1 && dims.p < q->q2;
    const bool q1_ok = q1_region_membership(c.origin_exact, q->q1, dims);
    const bool q2_ok = q2_bound < q->q2;
    cfg["q1_in_region"] = q1_ok;
    cfg["q2_above_bound"] = q2_ok;
    cfg["both_above_p"] = above_p;
    if (c.origin_exact.gamma != dims.p - c.origin_exact.a) {
      const auto w = xi_witness_origin(c.origin_exact, q->q1, dims);
      ojson wj;
      wj["empty"] = w.empty;
      if (!w.empty) {
        put(wj, "lo", w.lo);
        put(wj, "hi", w.hi);
        wj["closed_lo"] = w.closed_lo;
        wj["closed_hi"] = w.closed_hi;
      }
      cfg["xi_witness_origin"] = wj;
    }
    if (q2_ok) {
      const auto w = xi_witness_infinity(c.infinity_exact, q->q2, dims);
      ojson wj;
      wj["case"] = to_string(w.case_id);
      put(wj, "xi", w.xi);
      put(wj, "alpha_eff", w.alpha_eff);
      put(wj, "beta_eff", w.beta_eff);
      put(wj, "delta", tail_decay_delta(c.infinity_exact, q->q2, dims));
      cfg["xi_witness_infinity"] = wj;
    }
    out.admissible = above_p && q1_ok && q2_ok;
    j["configured"] = cfg;
  }
  j["admissible"] = out.admissible ? ojson(*out.admissible) : ojson(nullptr);
  j["origin"] = origin;
  j["infinity"] = infinity;
  out.doc = j;
  return out;
}

const PotentialSet& require_potentials(const RunConfig& c) {
  if (!c.potentials) throw ConfigError("config has no 'potentials'");
  return *c.potentials;
}

const NonlinearitySpec& require_nonlinearity(const RunConfig& c) {
  if (!c.nonlinearity) throw ConfigError("config has no 'nonlinearity'");
  return *c.nonlinearity;
}

// solver copy of the nonlinearity with exponents sorted ascending
NonlinearitySpec sorted_nonlinearity(const NonlinearitySpec& nl) {
  NonlinearitySpec out = nl;
  if (out.q2 < out.q1) std::swap(out.q1, out.q2);
  return out;
}

ojson bound_json(const AsymptoticBound& b) {
  ojson j;
  j["quantity"] = to_string(b.quantity);
  j["r_lo"] = b.r_lo;
  j["r_hi"] = std::isfinite(b.r_hi) ? ojson(b.r_hi) : ojson("inf");
  j["value"] = b.value;
  j["log_value"] = b.log_value;
  j["grid_points"] = b.grid_points;
  j["converged"] = b.converged;
  j["open_end_growth"] = b.open_end_growth;
  return j;
}

ojson report_json(const HypothesisReport& r) {
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["gating"] = c.gating;
    j["heuristic"] = c.heuristic;
    j["detail"] = c.detail;
    if (c.bound) j["bound"] = bound_json(*c.bound);
    checks.push_back(j);
  }
  return checks;
}

ojson solve_report_json(const SolveReport& r) {
  ojson j;
  j["energy"] = r.energy;
  j["norm_X_p"] = r.norm_X_p;
  j["residual"] = r.residual;
  j["nehari_gap"] = r.nehari_gap;
  j["iterations"] = r.iterations;
  j["decay_slope_origin"] = r.decay_slope_origin;
  j["decay_slope_infinity"] = r.decay_slope_infinity;
  j["nu0_bound"] = r.nu0_bound;
  j["nu_inf_bound"] = r.nu_inf_bound;
  j["u_max"] = r.u_max;
  j["u_min"] = r.u_min;
  j["converged"] = r.converged;
  j["energy_monotone"] = r.energy_monotone;
  j["pinned_nodes"] = r.pinned_nodes;
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "'");
}

ojson curve_json(const ProbeCurve& c, double threshold) {
  ojson j;
  j["q"] = c.q;
  j["end"] = to_string(c.end);
  ojson samples = ojson::array();
  for (const auto& s : c.samples) samples.push_back(ojson{{"R", s.R}, {"value", s.value}, {"log_value", s.log_value}});
  j["samples"] = samples;
  ojson ratios = ojson::array();
  for (double r : decade_ratios(c)) ratios.push_back(r);
  j["decade_ratios"] = ratios;
  j["threshold"] = threshold;
  j["verdict"] = to_string(decay_verdict(c, threshold));
  return j;
}

struct SolveOutcome {
  int exit_code = kExitOk;
  ojson doc;
  std::optional<RadialFunction> solution;
  std::optional<SolveReport> report;
};

SolveOutcome run_solver(const RunConfig& c, double r_min, double r_max, int nodes) {
  const auto dims = c.dims();
  const auto nl = sorted_nonlinearity(require_nonlinearity(c));
  auto grid = std::make_shared<const RadialGrid>(build_grid(r_min, r_max, nodes, dims));
  const auto table = eval_potentials(require_potentials(c), grid->r);
  SolveOptions opt;
  opt.tol = c.solver.tol;
  opt.max_iter = c.solver.max_iter;
  opt.origin = c.origin();
  opt.infinity = c.infinity();
  SolveOutcome out;
  out.doc["grid"] = ojson{{"r_min", r_min}, {"r_max", r_max}, {"nodes", nodes}};
  try {
    auto [u, rep] = solve_ground_state(table, nl, grid, opt);
    out.doc["status"] = "converged";
    out.doc["report"] = solve_report_json(rep);
    out.solution = std::move(u);
    out.report = rep;
  } catch (const NotConverged& e) {
    out.exit_code = kExitNotConverged;
    out.doc["status"] = "not_converged";
    out.doc["message"] = e.what();
    out.doc["report"] = solve_report_json(e.report());
    out.report = e.report();
  } catch (const CollapsedToZero& e) {
    out.exit_code = kExitCollapsed;
    out.doc["status"] = "collapsed_to_zero";
    out.doc["message"] = e.what();
    out.doc["report"] = solve_report_json(e.report());
    out.report = e.report();
  }
  return out;
}

}  // namespace

ojson error_document(const std::string& command, const std::string& message) {
  ojson j = header(command, nullptr);
  j["error"] = message;
  return j;
}

CommandResult cmd_region(const RunConfig& config) {
  return guarded("region", [&] {
    ojson j = header("region", &config);
    const auto s = region_summary(config);
    for (auto it = s.doc.begin(); it != s.doc.end(); ++it) j[it.key()] = it.value();
    return CommandResult{kExitOk, j};
  });
}

CommandResult cmd_region_plot(const RunConfig& config, std::ostream& csv) {
  return guarded("region-plot", [&] {
    using LD = long double;
    const auto& dims = config.dims_exact;
    validate(config.origin_exact, dims);
    const OriginBranch branch = origin_branch(config.origin_exact, dims);
    const ProblemDims<LD> ld_dims{dims.N, dims.p.convert_to<LD>()};
    EndpointAsymptotics<LD> a{End::origin, config.origin_exact.a.convert_to<LD>(), 0,
                              config.origin_exact.beta.convert_to<LD>(), config.origin_exact.gamma.convert_to<LD>(),
                              config.origin_exact.R.convert_to<LD>()};
    const auto& pl = config.plot;
    csv << "alpha,q,member\n";
    long members = 0;
    char buf[96];
    for (int i = 0; i < pl.n_alpha; ++i) {
      const LD alpha = pl.alpha_lo + (LD(pl.alpha_hi) - pl.alpha_lo) * i / (pl.n_alpha - 1);
      a.alpha = alpha;
      for (int k = 0; k < pl.n_q; ++k) {
        const LD q = pl.q_lo + (LD(pl.q_hi) - pl.q_lo) * k / (pl.n_q - 1);
        const bool m = q1_region_membership_in_branch(a, q, ld_dims, branch);
        members += m ? 1 : 0;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d\n", static_cast<double>(alpha), static_cast<double>(q),
                      m ? 1 : 0);
        csv << buf;
      }
    }
    ojson j = header("region-plot", &config);
    j["branch"] = to_string(branch);
    j["alpha_range"] = ojson::array({pl.alpha_lo, pl.alpha_hi});
    j["q_range"] = ojson::array({pl.q_lo, pl.q_hi});
    j["resolution"] = ojson::array({pl.n_alpha, pl.n_q});
    j["members"] = members;
    j["pixels"] = static_cast<long>(pl.n_alpha) * pl.n_q;
    return CommandResult{kExitOk, j};
  });
}

CommandResult cmd_check(const RunConfig& config) {
  return guarded("check", [&] {
    ValidationOptions v;
    v.r_lo = config.table.r_min;
    v.r_hi = config.table.r_max;
    v.per_decade = config.table.per_decade;
    v.s = config.s;
    const auto report =
        validate_hypotheses(require_potentials(config), config.dims(), config.origin(), config.infinity(), v);
    ojson j = header("check", &config);
    j["checks"] = report_json(report);
    j["all_passed"] = report.all_passed();
    return CommandResult{report.all_passed() ? kExitOk : kExitHypothesis, j};
  });
}

CommandResult cmd_probe(const RunConfig& config, const CommandOptions& options) {
  return guarded("probe", [&] {
    const auto dims = config.dims();
    const auto q = configured_exponents(config);
    if (!q) throw ConfigError("probe needs the nonlinearity exponents");
    const auto table = eval_potentials(require_potentials(config),
                                       log_spaced_radii(config.table.r_min, config.table.r_max, config.table.per_decade));
    const double nu0 = to_double(pointwise_decay_exponent(config.origin_exact, config.dims_exact));
    const double nu_inf = to_double(pointwise_decay_exponent(config.infinity_exact, config.dims_exact));
    const auto c0 = probe_S0(table, dims, to_double(q->q1), nu0, config.probe.R_origin);
    const auto c1 = probe_Sinf(table, dims, to_double(q->q2), nu_inf, config.probe.R_infinity);

    ojson j = header("probe", &config);
    j["S0"] = curve_json(c0, config.probe.threshold);
    j["S0"]["nu_center"] = nu0;
    j["Sinf"] = curve_json(c1, config.probe.threshold);
    j["Sinf"]["nu_center"] = nu_inf;
    if (options.out_dir) {
      ensure_dir(*options.out_dir);
      std::ofstream a(*options.out_dir / "probe_S0.csv"), b(*options.out_dir / "probe_Sinf.csv");
      write_probe_csv(c0, a);
      write_probe_csv(c1, b);
      j["files"] = ojson::array({(*options.out_dir / "probe_S0.csv").string(),
                                 (*options.out_dir / "probe_Sinf.csv").string()});
    }
    return CommandResult{kExitOk, j};
  });
}

CommandResult cmd_solve(const RunConfig& config, const CommandOptions& options) {
  return guarded("solve", [&] {
    ojson j = header("solve", &config);
    require_potentials(config);
    const auto& nl = require_nonlinearity(config);
    j["nonlinearity"] = ord(to_json(nl));
    j["exponents_swapped"] = nl.q2 < nl.q1;

    if (!options.force) {
      const auto check = cmd_check(config);
      if (check.exit_code != kExitOk) {
        j["status"] = "hypotheses_failed";
        j["check"] = check.output;
        return CommandResult{check.exit_code, j};
      }
    }
    try {
      const auto region = region_summary(config);
      j["admissible"] = region.admissible ? ojson(*region.admissible) : ojson(nullptr);
    } catch (const Error& e) {
      j["admissible"] = nullptr;
      j["admissibility_error"] = e.what();
    }

    auto main = run_solver(config, config.grid.r_min, config.grid.r_max, config.grid.nodes);
    for (auto it = main.doc.begin(); it != main.doc.end(); ++it) j[it.key()] = it.value();

    if (main.solution && config.solver.truncation_check) {
      const double full = std::log(config.grid.r_max / config.grid.r_min);
      const double part = std::log(config.solver.truncation_r_max / config.solver.truncation_r_min);
      const int nodes = std::max(16, static_cast<int>(std::lround((config.grid.nodes - 1) * part / full)) + 1);
      auto alt = run_solver(config, config.solver.truncation_r_min, config.solver.truncation_r_max, nodes);
      ojson t;
      t["grid"] = alt.doc["grid"];
      t["status"] = alt.doc["status"];
      if (alt.report && alt.exit_code == kExitOk) {
        t["energy"] = alt.report->energy;
        t["relative_energy_change"] =
            std::abs(alt.report->energy - main.report->energy) / std::abs(main.report->energy);
        t["relative_u_max_change"] = std::abs(alt.report->u_max - main.report->u_max) / main.report->u_max;
      }
      j["truncation_sensitivity"] = t;
    }

    if (options.out_dir) {
      ensure_dir(*options.out_dir);
      if (main.solution) {
        std::ofstream csv(*options.out_dir / "solution.csv");
        csv << "r,u\n";
        char buf[96];
        for (std::size_t i = 0; i < main.solution->values.size(); ++i) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", main.solution->grid->r[i], main.solution->values[i]);
          csv << buf;
        }
      }
      write_text(*options.out_dir / "report.json", dump_json(j));
    }
    return CommandResult{main.exit_code, j};
  });
}

// ---------------------------------------------------------------------------
// Published examples

namespace {

json power(const Rational& c, const Rational& e) {
  return json{{"kind", "power"}, {"c", to_string(c)}, {"e", to_string(e)}};
}

json asym(const Rational& a, const Rational& alpha, const Rational& beta, const Rational& gamma) {
  return json{{"a", to_string(a)}, {"alpha", to_string(alpha)}, {"beta", to_string(beta)},
              {"gamma", to_string(gamma)}, {"R", "1"}};
}

Rational ex2_gamma0(const std::string& name) {
  if (name == "ex2_I") return Rational(4);
  if (name == "ex2_II") return Rational(5);
  if (name == "ex2_III") return Rational(6);
  throw ConfigError("unknown example '" + name + "'");
}

// second family: q* and q** at infinity in closed form
Rational ex2_qs_inf(const ProblemDims<Rational>& d, const Rational& dd) {
  return Rational(2) * d.p * (Rational(d.N) + dd) / Rational(2 * d.N + 1);
}

Rational ex2_qss_inf(const ProblemDims<Rational>& d, const Rational& dd) {
  return d.p * (Rational(2) * d.p * (dd + Rational(d.N - 1)) - Rational(5)) / (d.p * Rational(2 * d.N - 1) - Rational(5));
}

EndpointAsymptotics<Rational> ex2_infinity(const Rational& d) {
  return {End::infinity, Rational(-2), d, Rational(0), Rational(-1, 2), Rational(1)};
}

struct Assertions {
  ojson list = ojson::array();
  bool ok = true;
  void equal(const std::string& name, const Rational& expected, const Rational& actual) {
    const bool pass = expected == actual;
    ok = ok && pass;
    list.push_back(ojson{{"name", name},
                         {"expected", to_string(expected)},
                         {"actual", to_string(actual)},
                         {"passed", pass}});
  }
  void truth(const std::string& name, bool value) {
    ok = ok && value;
    list.push_back(ojson{{"name", name}, {"passed", value}});
  }
};

}  // namespace

std::optional<Rational> smallest_d_with_qss_above_qs(const ProblemDims<Rational>& dims, const Rational& lo,
                                                     const Rational& hi, const Rational& step) {
  for (Rational d = lo; d <= hi; d += step) {
    const auto a = ex2_infinity(d);
    if (q_star(a.alpha, a.beta, a.gamma, dims) < q_double_star(a.a, a.alpha, a.beta, a.gamma, dims)) return d;
  }
  return std::nullopt;
}

json example_config(const std::string& name, const Rational& d) {
  json doc;
  doc["schema_version"] = 1;
  if (name == "ex1") {
    doc["dims"] = json{{"N", 4}, {"p", "2"}};
    doc["potentials"] = json{
        {"A", power(1, -1)},
        {"V", json{{"kind", "piecewise"}, {"r", 1}, {"inner", json{{"kind", "exponential_inv"}, {"scale", 1}}},
                   {"outer", power(1, -3)}}},
        {"K", json{{"kind", "piecewise"}, {"r", 1}, {"inner", json{{"kind", "exponential_inv"}, {"scale", 1}}},
                   {"outer", json{{"kind", "constant"}, {"c", 1}}}}}};
    doc["asymptotics"] = json{{"origin", asym(-1, 0, 1, 8)}, {"infinity", asym(-1, 0, 0, 3)}};
    doc["nonlinearity"] = json{{"kind", "pure_power"}, {"q", 9}};
    return doc;
  }
  const Rational g0 = ex2_gamma0(name);
  const ProblemDims<Rational> dims{5, Rational(2)};
  doc["dims"] = json{{"N", dims.N}, {"p", to_string(dims.p)}};
  doc["potentials"] = json{
      {"A", json{{"kind", "min"}, {"args", json::array({power(1, -2), power(1, -1)})}}},
      {"V", json{{"kind", "max"}, {"args", json::array({power(1, -g0), power(1, Rational(1, 2))})}}},
      {"K", json{{"kind", "max"}, {"args", json::array({power(1, d), power(1, Rational(1, 2))})}}}};
  doc["asymptotics"] = json{{"origin", asym(-1, Rational(1, 2), 0, g0)}, {"infinity", asym(-2, d, 0, Rational(-1, 2))}};
  // q1 = 3 sits inside every subcase interval; q2 is the first integer >= 9 above the threshold
  const Rational bound = q2_lower_bound(ex2_infinity(d), dims);
  Rational q2(9);
  while (!(bound < q2)) q2 += 1;
  doc["nonlinearity"] = json{{"kind", "min_powers"}, {"q1", 3}, {"q2", to_string(q2)}};
  return doc;
}

CommandResult cmd_example(const std::string& name, const CommandOptions& options, const Rational& d) {
  return guarded("example", [&] {
    const RunConfig config = parse_config(example_config(name, d));
    const auto& dims = config.dims_exact;
    ojson j = header("example", &config);
    j["name"] = name;
    Assertions as;
    ojson thresholds;

    if (name == "ex1") {
      const auto c = critical_exponents(config.infinity_exact, dims);
      const Rational expected = dims.p * Rational(dims.N) / (Rational(dims.N) - dims.p - 1);
      const auto set = q1_admissible_set(config.origin_exact, dims);
      put(thresholds, "q_star_inf", *c.q_star);
      put(thresholds, "q_double_star_inf", *c.q_double_star);
      put(thresholds, "q1_lower", set.lower);
      put(thresholds, "q2_lower_bound", q2_lower_bound(config.infinity_exact, dims));
      as.equal("q_star_inf = pN/(N-p-1)", expected, *c.q_star);
      as.equal("q_double_star_inf = pN/(N-p-1)", expected, *c.q_double_star);
      as.equal("q1_lower = p", dims.p, set.lower);
      as.truth("q1_upper infinite", !set.upper.has_value());
    } else {
      // formula layer at N = 4, p = 2 alongside the pipeline dimensions
      for (const ProblemDims<Rational>& fd : {ProblemDims<Rational>{4, Rational(2)}, dims}) {
        const auto a = ex2_infinity(d);
        const Rational qs = q_star(a.alpha, a.beta, a.gamma, fd);
        const Rational qss = q_double_star(a.a, a.alpha, a.beta, a.gamma, fd);
        const std::string tag = "N" + std::to_string(fd.N);
        put(thresholds, "q_star_inf_" + tag, qs);
        put(thresholds, "q_double_star_inf_" + tag, qss);
        thresholds["qss_above_qs_" + tag] = qs < qss;
        as.equal("q_star_inf closed form (" + tag + ")", ex2_qs_inf(fd, d), qs);
        as.equal("q_double_star_inf closed form (" + tag + ")", ex2_qss_inf(fd, d), qss);
        as.truth("q_double_star_inf > q_star_inf (" + tag + ")", qs < qss);
        const auto smallest = smallest_d_with_qss_above_qs(fd, Rational(0), Rational(200), Rational(1, 2));
        put(thresholds, "smallest_sampled_d_qss_above_qs_" + tag, smallest);
      }
      const auto& o = config.origin_exact;
      const Rational p = dims.p, N(dims.N), g0 = o.gamma;
      const auto set = q1_admissible_set(o, dims);
      put(thresholds, "q1_lower", set.lower);
      put(thresholds, "q1_upper", set.upper);
      put(thresholds, "q1_solver_lower", std::max(set.lower, p));
      if (name == "ex2_I") {
        const Rational qs = p * (2 * N + 1) / (2 * N - 2 * g0);
        const Rational qss = p * (p / 2 + g0 + p * (N - 1) - 1) / (p * (N - 1) - g0 * (p - 1) - 1);
        as.equal("q1_upper = min{q*, q**}", std::min(qs, qss), set.upper.value_or(Rational(-1)));
        as.truth("p < min{q*, q**}", p < std::min(qs, qss));
      } else if (name == "ex2_II") {
        const Rational upper = p * (p / 2 + (N - 1) * (p + 1)) / (N - p - 1);
        as.equal("q1_upper = p(p/2 + (N-1)(p+1))/(N-p-1)", upper, set.upper.value_or(Rational(-1)));
        as.truth("alpha_0 > -(1-beta_0)N", set.alpha_constraint && set.alpha_constraint->satisfied);
      } else {
        const Rational upper = p * (p / 2 + g0 + p * (N - 1) - 1) / (p * (N - 1) - g0 * (p - 1) - 1);
        as.equal("q1_upper = q**", upper, set.upper.value_or(Rational(-1)));
        as.truth("q*_0 < 0", q_star(o.alpha, o.beta, o.gamma, dims) < 0);
      }
      put(thresholds, "q2_lower_bound", q2_lower_bound(config.infinity_exact, dims));
    }
    j["thresholds"] = thresholds;
    j["assertions"] = as.list;
    j["assertions_passed"] = as.ok;

    const auto region = cmd_region(config);
    const auto check = cmd_check(config);
    const auto probe = cmd_probe(config, options);
    CommandOptions solve_options = options;
    solve_options.force = true;
    const auto solve = cmd_solve(config, solve_options);
    j["region"] = region.output;
    j["check"] = check.output;
    j["probe"] = probe.output;
    j["solve"] = solve.output;

    int code = kExitOk;
    for (int c : {region.exit_code, check.exit_code, probe.exit_code, solve.exit_code})
      if (code == kExitOk && c != kExitOk) code = c;
    if (code == kExitOk && !as.ok) code = kExitFailure;
    return CommandResult{code, j};
  });
}

}  // namespace quasiradial
