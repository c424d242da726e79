#include "quasiradial/commands.hpp"
#include "quasiradial/json_writer.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace quasiradial;
using ojson = nlohmann::ordered_json;

namespace {

struct Args {
  std::string config;
  std::string out;
  std::string sweep;
  std::string d = "10";
  bool force = false;
};

CommandOptions command_options(const Args& a) {
  CommandOptions o;
  if (!a.out.empty()) o.out_dir = a.out;
  o.force = a.force;
  return o;
}

int emit(const CommandResult& r) {
  std::cout << dump_json(r.output);
  return r.exit_code;
}

// Runs one config-driven command, or the same command over a sweep.
int run_config_command(const std::string& name, const Args& args,
                       const std::function<CommandResult(const RunConfig&, const CommandOptions&)>& body) {
  nlohmann::json document;
  try {
    std::ifstream in(args.config);
    if (!in) throw ConfigError("cannot open config '" + args.config + "'");
    document = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    return emit({kExitInvalidConfig, error_document(name, e.what())});
  }
  auto once = [&](const nlohmann::json& doc, const CommandOptions& options) {
    return guarded(name, [&] { return body(parse_config(doc), options); });
  };
  if (args.sweep.empty()) return emit(once(document, command_options(args)));

  SweepSpec sweep;
  try {
    sweep = parse_sweep(args.sweep);
  } catch (const Error& e) {
    return emit({kExitInvalidConfig, error_document(name, e.what())});
  }
  ojson out;
  out["schema_version"] = 1;
  out["command"] = name;
  out["sweep_key"] = sweep.key;
  ojson runs = ojson::array();
  int worst = kExitOk;
  for (const auto& v : sweep.values) {
    nlohmann::json doc = document;
    CommandOptions options = command_options(args);
    if (options.out_dir) *options.out_dir /= sweep.key + "=" + to_string(v);
    CommandResult r;
    try {
      set_json_path(doc, sweep.key, to_string(v));
      r = once(doc, options);
    } catch (const Error& e) {
      r = {kExitInvalidConfig, error_document(name, e.what())};
    }
    runs.push_back(ojson{{"value", to_double(v)}, {"value_exact", to_string(v)}, {"exit_code", r.exit_code},
                         {"result", r.output}});
    if (worst == kExitOk) worst = r.exit_code;
  }
  out["runs"] = runs;
  std::cout << dump_json(out);
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponent regions, hypothesis checks, embedding probes and ground states for radial quasilinear problems"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* sub, bool with_out) {
    sub->add_option("--config,-c", args.config, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--sweep", args.sweep, "KEY=lo:hi:step, e.g. nonlinearity.q2=9:12:1");
    if (with_out) sub->add_option("--out,-o", args.out, "output directory");
  };

  auto* region = app.add_subcommand("region", "admissible exponent sets at both ends");
  add_common(region, false);
  auto* plot = app.add_subcommand("region-plot", "rasterized (alpha, q) membership at the origin");
  add_common(plot, true);
  auto* check = app.add_subcommand("check", "numerical checks of the potential hypotheses");
  add_common(check, false);
  auto* probe = app.add_subcommand("probe", "lower bounds for the tail embedding constants");
  add_common(probe, true);
  auto* solve = app.add_subcommand("solve", "radial ground state on a truncated grid");
  add_common(solve, true);
  solve->add_flag("--force", args.force, "solve even if hypothesis checks fail");

  std::string example_name;
  auto* example = app.add_subcommand("example", "run one of the bundled examples");
  example->add_option("name", example_name, "ex1, ex2_I, ex2_II or ex2_III")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2_I", "ex2_II", "ex2_III"}));
  example->add_option("--d", args.d, "growth exponent of K in the second family");
  example->add_option("--out,-o", args.out, "output directory");
  example->add_option("--sweep", args.sweep, "d=lo:hi:step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidConfig;
  }

  if (*region) return run_config_command("region", args, [](const RunConfig& c, const CommandOptions&) {
      return cmd_region(c);
    });
  if (*plot)
    return run_config_command("region-plot", args, [](const RunConfig& c, const CommandOptions& o) {
      const std::filesystem::path dir = o.out_dir.value_or(".");
      std::filesystem::create_directories(dir);
      std::ofstream csv(dir / "region.csv");
      auto r = cmd_region_plot(c, csv);
      r.output["file"] = (dir / "region.csv").string();
      return r;
    });
  if (*check) return run_config_command("check", args, [](const RunConfig& c, const CommandOptions&) {
      return cmd_check(c);
    });
  if (*probe) return run_config_command("probe", args, cmd_probe);
  if (*solve) return run_config_command("solve", args, cmd_solve);
  if (*example) {
    Rational d;
    try {
      d = parse_rational(args.d);
    } catch (const Error& e) {
      return emit({kExitInvalidConfig, error_document("example", e.what())});
    }
    if (args.sweep.empty()) return emit(cmd_example(example_name, command_options(args), d));
    SweepSpec sweep;
    try {
      sweep = parse_sweep(args.sweep);
      if (sweep.key != "d") throw ConfigError("example sweeps only over d");
    } catch (const Error& e) {
      return emit({kExitInvalidConfig, error_document("example", e.what())});
    }
    ojson out{{"schema_version", 1}, {"command", "example"}, {"name", example_name}, {"sweep_key", "d"}};
    ojson runs = ojson::array();
    int worst = kExitOk;
    for (const auto& v : sweep.values) {
      CommandOptions options = command_options(args);
      if (options.out_dir) *options.out_dir /= "d=" + to_string(v);
      const auto r = cmd_example(example_name, options, v);
      runs.push_back(ojson{{"value", to_double(v)}, {"value_exact", to_string(v)}, {"exit_code", r.exit_code},
                           {"result", r.output}});
      if (worst == kExitOk) worst = r.exit_code;
    }
    out["runs"] = runs;
    std::cout << dump_json(out);
    return worst;
  }
  return kExitFailure;
}
