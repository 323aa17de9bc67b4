#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "spinholo/errors.hpp"
#include "spinholo/reports.hpp"

namespace spinholo::reports {

namespace {

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << body;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

// Table commands: CSV or JSON to stdout, or files under the --out prefix.
void emit_table(const RunConfig& cfg, const std::string& csv, const std::string& json,
                const std::string& svg, std::ostream& out) {
  if (cfg.output.empty()) {
    if (cfg.format == OutputFormat::svg) throw ConfigError("format svg needs --out <prefix>");
    out << (cfg.format == OutputFormat::json ? json : csv);
    return;
  }
  switch (cfg.format) {
    case OutputFormat::csv: write_file(cfg.output + ".csv", csv); break;
    case OutputFormat::json: write_file(cfg.output + ".json", json); break;
    case OutputFormat::svg:
      write_file(cfg.output + ".csv", csv);
      write_file(cfg.output + ".svg", svg);
      break;
  }
  write_file(cfg.output + ".config.json", config_to_json(cfg));
}

void emit_report(const RunConfig& cfg, const std::string& text, const std::string& json,
                 std::ostream& out) {
  if (cfg.format == OutputFormat::svg) {
    throw ConfigError("command '" + std::string(to_string(cfg.command)) + "' has no svg output");
  }
  const std::string& body = cfg.format == OutputFormat::json ? json : text;
  if (cfg.output.empty()) {
    out << body;
    return;
  }
  write_file(cfg.output + (cfg.format == OutputFormat::json ? ".json" : ".txt"), body);
  write_file(cfg.output + ".config.json", config_to_json(cfg));
}

void dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::gate: {
      const GateReport r = cmd_gate(cfg);
      emit_report(cfg, gate_text(r), gate_json(r), out);
      return;
    }
    case Command::classify: {
      if (cfg.matrix.empty()) throw ConfigError("classify: no matrix file given");
      const ClassifyReport r = cmd_classify(load_matrix(cfg.matrix));
      emit_report(cfg, classify_text(r), classify_json(r), out);
      return;
    }
    case Command::sweep_theta: {
      const auto rows = cmd_sweep_theta(cfg);
      emit_table(cfg, theta_csv(rows), theta_json(rows),
                 cfg.format == OutputFormat::svg ? theta_svg(rows) : std::string{}, out);
      return;
    }
    case Command::sweep_dm:
    case Command::sweep_noise:
    case Command::sweep_dephasing: {
      const SweepTable t = cmd_sweeps(cfg);
      emit_table(cfg, sweep_csv(t), sweep_json(t),
                 cfg.format == OutputFormat::svg ? sweep_svg(t) : std::string{}, out);
      return;
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holonomic two-qubit gate simulator"};
  app.name(argc > 0 ? argv[0] : "spinholo");

  std::string command;
  std::string matrix;
  std::string config_path;
  std::string out_prefix;
  std::string format;
  int grid = -1;
  int steps = -1;
  long long seed = -1;

  app.add_option("command", command,
                 "gate | sweep-theta | sweep-dm | sweep-noise | sweep-dephasing | classify")
      ->required();
  app.add_option("matrix", matrix, "4x4 matrix file (classify)");
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_prefix, "output path prefix");
  app.add_option("--format", format, "csv | json | svg");
  app.add_option("--grid", grid, "points per sweep axis")->check(CLI::NonNegativeNumber);
  app.add_option("--steps", steps, "time steps for stepped propagation")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized envelopes")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    cfg.command = command_from_string(command);
    if (!matrix.empty()) cfg.matrix = matrix;
    if (!out_prefix.empty()) cfg.output = out_prefix;
    if (!format.empty()) cfg.format = format_from_string(format);
    if (grid >= 0) cfg.grid = grid;
    if (steps >= 0) cfg.steps = steps;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    dispatch(cfg, out);
  } catch (const DimensionOverflow& e) {
    err << "error: " << e.what()
        << "\nhint: lower nuclei_per_electron; the exact bath simulation supports at most 3 "
           "nuclei per electron\n";
    return 3;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace spinholo::reports
