#pragma once

// Run configuration: one JSON document with "schema_version": 1.

#include "quasiradial/exponent_calculus.hpp"
#include "quasiradial/nonlinearity.hpp"
#include "quasiradial/potential_model.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace quasiradial {

struct GridConfig {
  double r_min = 1e-4;
  double r_max = 1e4;
  int nodes = 2000;
};

struct TableConfig {
  double r_min = 1e-6;
  double r_max = 1e6;
  int per_decade = 256;
};

struct SolverConfig {
  double tol = 1e-6;
  int max_iter = 5000;
  bool truncation_check = true;
  double truncation_r_min = 1e-3;
  double truncation_r_max = 1e3;
};

struct ProbeConfig {
  std::vector<double> R_origin{1e-1, 1e-2, 1e-3};
  std::vector<double> R_infinity{1e1, 1e2, 1e3};
  double threshold = 0.9;
};

struct RegionPlotConfig {
  double alpha_lo = -5;
  double alpha_hi = 5;
  double q_lo = 1;
  double q_hi = 21;
  int n_alpha = 101;
  int n_q = 201;
};

struct RunConfig {
  ProblemDims<Rational> dims_exact;
  EndpointAsymptotics<Rational> origin_exact;
  EndpointAsymptotics<Rational> infinity_exact;
  std::optional<PotentialSet> potentials;
  std::optional<NonlinearitySpec> nonlinearity;
  std::optional<Rational> q1_exact;
  std::optional<Rational> q2_exact;
  double s = 2.0;  // K in L^s_loc
  GridConfig grid;
  TableConfig table;
  SolverConfig solver;
  ProbeConfig probe;
  RegionPlotConfig plot;
  nlohmann::json document;

  ProblemDims<double> dims() const;
  EndpointAsymptotics<double> origin() const;
  EndpointAsymptotics<double> infinity() const;
};

EndpointAsymptotics<double> to_double(const EndpointAsymptotics<Rational>& a);
ProblemDims<double> to_double(const ProblemDims<Rational>& d);

/// Structural parse. Dimensions, potentials and the nonlinearity are
/// validated here; the exponent data is validated by the commands that use
/// it. Throws ConfigError (or a more specific Error).
RunConfig parse_config(const nlohmann::json& document);
RunConfig load_config(const std::string& path);

nlohmann::json asymptotics_to_json(const EndpointAsymptotics<Rational>& a);

/// Sets a dotted path such as "nonlinearity.q2" in a JSON document.
void set_json_path(nlohmann::json& document, const std::string& dotted, const nlohmann::json& value);

struct SweepSpec {
  std::string key;
  std::vector<Rational> values;
};

/// Parses KEY=lo:hi:step (inclusive of hi when hit exactly).
SweepSpec parse_sweep(const std::string& text);

}  // namespace quasiradial
