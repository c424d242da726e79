#include "quasiradial/config.hpp"

#include "quasiradial/json_number.hpp"

#include <fstream>
#include <sstream>

namespace quasiradial {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError("missing '" + std::string(key) + "' in " + where);
  return j.at(key);
}

int json_int(const json& j, const std::string& what) {
  const Rational x = json_rational(j);
  if (boost::multiprecision::denominator(x) != 1) throw ConfigError(what + " must be an integer");
  return boost::multiprecision::numerator(x).convert_to<int>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.is_object() && j.contains(key) ? json_double(j.at(key)) : fallback;
}

int int_or(const json& j, const char* key, int fallback) {
  return j.is_object() && j.contains(key) ? json_int(j.at(key), key) : fallback;
}

std::vector<double> list_or(const json& j, const char* key, std::vector<double> fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  if (!j.at(key).is_array()) throw ConfigError(std::string(key) + " must be an array");
  std::vector<double> out;
  for (const auto& v : j.at(key)) out.push_back(json_double(v));
  return out;
}

EndpointAsymptotics<Rational> parse_asym(const json& j, End end) {
  const std::string where = std::string("asymptotics.") + to_string(end);
  EndpointAsymptotics<Rational> a;
  a.end = end;
  a.a = json_rational(require(j, "a", where));
  a.alpha = json_rational(require(j, "alpha", where));
  a.beta = json_rational(require(j, "beta", where));
  a.gamma = json_rational(require(j, "gamma", where));
  a.R = j.contains("R") ? json_rational(j.at("R")) : Rational(1);
  return a;
}

std::pair<double, double> range_or(const json& j, const char* key, double lo, double hi) {
  if (!j.is_object() || !j.contains(key)) return {lo, hi};
  const auto& r = j.at(key);
  if (!r.is_array() || r.size() != 2) throw ConfigError(std::string(key) + " must be [lo, hi]");
  return {json_double(r[0]), json_double(r[1])};
}

}  // namespace

ProblemDims<double> to_double(const ProblemDims<Rational>& d) { return {d.N, to_double(d.p)}; }

EndpointAsymptotics<double> to_double(const EndpointAsymptotics<Rational>& a) {
  return {a.end, to_double(a.a), to_double(a.alpha), to_double(a.beta), to_double(a.gamma), to_double(a.R)};
}

ProblemDims<double> RunConfig::dims() const { return to_double(dims_exact); }
EndpointAsymptotics<double> RunConfig::origin() const { return to_double(origin_exact); }
EndpointAsymptotics<double> RunConfig::infinity() const { return to_double(infinity_exact); }

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (!doc.contains("schema_version") || json_int(doc.at("schema_version"), "schema_version") != 1)
    throw ConfigError("config needs \"schema_version\": 1");
  RunConfig c;
  c.document = doc;

  const auto& dims = require(doc, "dims", "config");
  c.dims_exact.N = json_int(require(dims, "N", "dims"), "dims.N");
  c.dims_exact.p = json_rational(require(dims, "p", "dims"));
  c.dims_exact.validate();

  const auto& asym = require(doc, "asymptotics", "config");
  c.origin_exact = parse_asym(require(asym, "origin", "asymptotics"), End::origin);
  c.infinity_exact = parse_asym(require(asym, "infinity", "asymptotics"), End::infinity);

  if (doc.contains("potentials")) {
    const auto& pj = doc.at("potentials");
    c.potentials = PotentialSet{potential_from_json(require(pj, "A", "potentials")),
                                potential_from_json(require(pj, "V", "potentials")),
                                potential_from_json(require(pj, "K", "potentials"))};
  }
  if (doc.contains("nonlinearity")) {
    const auto& nj = doc.at("nonlinearity");
    c.nonlinearity = nonlinearity_from_json(nj);
    if (nj.contains("q")) {
      c.q1_exact = c.q2_exact = json_rational(nj.at("q"));
    } else if (nj.contains("q1") && nj.contains("q2")) {
      c.q1_exact = json_rational(nj.at("q1"));
      c.q2_exact = json_rational(nj.at("q2"));
    } else if (nj.contains("q1")) {
      c.q1_exact = c.q2_exact = json_rational(nj.at("q1"));
    }
  }

  const json empty = json::object();
  const auto& check = doc.contains("check") ? doc.at("check") : empty;
  c.s = number_or(check, "s", c.s);
  if (!(c.s > 1)) throw ConfigError("check.s must exceed 1");

  const auto& grid = doc.contains("grid") ? doc.at("grid") : empty;
  c.grid.r_min = number_or(grid, "r_min", c.grid.r_min);
  c.grid.r_max = number_or(grid, "r_max", c.grid.r_max);
  c.grid.nodes = int_or(grid, "nodes", c.grid.nodes);
  if (!(c.grid.r_min > 0) || !(c.grid.r_min < c.grid.r_max) || c.grid.nodes < 16)
    throw ConfigError("grid needs 0 < r_min < r_max and at least 16 nodes");

  const auto& table = doc.contains("table") ? doc.at("table") : empty;
  c.table.r_min = number_or(table, "r_min", c.table.r_min);
  c.table.r_max = number_or(table, "r_max", c.table.r_max);
  c.table.per_decade = int_or(table, "per_decade", c.table.per_decade);
  if (!(c.table.r_min > 0) || !(c.table.r_min < c.table.r_max) || c.table.per_decade < 1)
    throw ConfigError("table needs 0 < r_min < r_max and a positive density");

  const auto& solver = doc.contains("solver") ? doc.at("solver") : empty;
  c.solver.tol = number_or(solver, "tol", c.solver.tol);
  c.solver.max_iter = int_or(solver, "max_iter", c.solver.max_iter);
  if (solver.contains("truncation_check")) c.solver.truncation_check = solver.at("truncation_check").get<bool>();
  c.solver.truncation_r_min = number_or(solver, "truncation_r_min", c.solver.truncation_r_min);
  c.solver.truncation_r_max = number_or(solver, "truncation_r_max", c.solver.truncation_r_max);
  if (!(c.solver.tol > 0) || c.solver.max_iter < 1) throw ConfigError("solver needs tol > 0 and max_iter >= 1");

  const auto& probe = doc.contains("probe") ? doc.at("probe") : empty;
  c.probe.R_origin = list_or(probe, "R_origin", c.probe.R_origin);
  c.probe.R_infinity = list_or(probe, "R_infinity", c.probe.R_infinity);
  c.probe.threshold = number_or(probe, "threshold", c.probe.threshold);

  const auto& plot = doc.contains("region_plot") ? doc.at("region_plot") : empty;
  std::tie(c.plot.alpha_lo, c.plot.alpha_hi) = range_or(plot, "alpha", c.plot.alpha_lo, c.plot.alpha_hi);
  std::tie(c.plot.q_lo, c.plot.q_hi) = range_or(plot, "q", c.plot.q_lo, c.plot.q_hi);
  if (plot.contains("resolution")) {
    const auto& r = plot.at("resolution");
    if (!r.is_array() || r.size() != 2) throw ConfigError("region_plot.resolution must be [n_alpha, n_q]");
    c.plot.n_alpha = json_int(r[0], "resolution");
    c.plot.n_q = json_int(r[1], "resolution");
  }
  if (c.plot.n_alpha < 2 || c.plot.n_q < 2 || !(c.plot.alpha_lo < c.plot.alpha_hi) || !(c.plot.q_lo < c.plot.q_hi))
    throw ConfigError("region_plot needs finite increasing ranges and resolution >= 2");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON in '") + path + "': " + e.what());
  }
  return parse_config(doc);
}

json asymptotics_to_json(const EndpointAsymptotics<Rational>& a) {
  return json{{"a", to_string(a.a)}, {"alpha", to_string(a.alpha)}, {"beta", to_string(a.beta)},
              {"gamma", to_string(a.gamma)}, {"R", to_string(a.R)}};
}

void set_json_path(json& doc, const std::string& dotted, const json& value) {
  json* node = &doc;
  std::stringstream ss(dotted);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  if (parts.empty()) throw ConfigError("empty sweep key");
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    if (!node->is_object()) throw ConfigError("sweep key '" + dotted + "' does not name an object path");
    node = &(*node)[parts[k]];
  }
  (*node)[parts.back()] = value;
}

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("sweep must look like KEY=lo:hi:step");
  SweepSpec s;
  s.key = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw ConfigError("sweep must look like KEY=lo:hi:step");
  const Rational lo = parse_rational(parts[0]), hi = parse_rational(parts[1]), step = parse_rational(parts[2]);
  if (!(step > 0) || hi < lo) throw ConfigError("sweep needs lo <= hi and step > 0");
  for (Rational v = lo; v <= hi; v += step) {
    s.values.push_back(v);
    if (s.values.size() > 100000) throw ConfigError("sweep has too many points");
  }
  return s;
}

}  // namespace quasiradial
