#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spinholo/gate_metrics.hpp"
#include "spinholo/holonomy_gate.hpp"
#include "spinholo/noise_lab.hpp"
#include "spinholo/propagation.hpp"
#include "spinholo/spin_system.hpp"

namespace spinholo::reports {

enum class Command { gate, sweep_theta, sweep_dm, sweep_noise, sweep_dephasing, classify };
enum class OutputFormat { csv, json, svg };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);
Command command_from_string(std::string_view s);
OutputFormat format_from_string(std::string_view s);

struct PulseParams {
  PulseShape shape = PulseShape::square;
  double amplitude = 1.0;
  int winding = 0;
  double width = 0.125;
  std::vector<PulseSample> samples;  // tabulated shape; random knots from `seed` when empty

  friend bool operator==(const PulseParams&, const PulseParams&) = default;
};

/// Everything needed to reproduce one CLI run. Loaded from flat JSON:
///
///   command, j1, j2, d1, d2, shape, amplitude, winding, width, samples,
///   d1_ratios, d2_ratios, ratios1, ratios2, lambdas, nuclei_per_electron,
///   op_time, matrix, output, format, grid, steps, seed
///
/// Unknown keys are rejected. List entries may be the string "inf".
struct RunConfig {
  Command command = Command::gate;
  ExchangeCouplings couplings{1.0, 1.0, 0.0, 0.0};
  PulseParams pulse;
  std::vector<double> d1_ratios;
  std::vector<double> d2_ratios;
  std::vector<double> ratios1;
  std::vector<double> ratios2;
  std::vector<double> lambdas;
  int nuclei_per_electron = 2;
  double op_time = 1.0;
  std::string matrix;
  std::string output;
  OutputFormat format = OutputFormat::csv;
  int grid = 0;  // 0: per-command default
  int steps = kDefaultSteps;
  std::uint64_t seed = 0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses a config document. Throws ConfigError naming the line or field.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::string& path);
std::string config_to_json(const RunConfig& cfg);

/// Pulse used by `gate`-style commands: cyclic (area * omega = (2n+1) pi) for
/// the given omega, with the requested envelope shape.
PulsePlan make_pulse(const PulseParams& params, double omega, std::uint64_t seed);

struct GateReport {
  ExchangeCouplings couplings;
  PolarCouplings polar;
  PulsePlan pulse;
  RegisterGate simulated;
  RegisterGate analytic;
  double deviation = 0.0;  // max |simulated - analytic|
  GateMetrics metrics;
};

GateReport cmd_gate(const RunConfig& cfg);

struct ClassifyReport {
  CMatrix matrix;
  GateMetrics metrics;
};

/// Reads a 4x4 matrix: four lines of four whitespace-separated entries such
/// as `1`, `-0.5j`, `0.707+0.707j`. Blank lines and `#` comments are skipped.
/// Throws ParseError.
CMatrix parse_matrix(std::string_view text);
CMatrix load_matrix(const std::string& path);

/// Throws NonUnitaryInput when the matrix is not unitary within 1e-8.
ClassifyReport cmd_classify(const CMatrix& m);

struct ThetaRow {
  double theta = 0.0;
  GateMetrics metrics;
};

std::vector<ThetaRow> cmd_sweep_theta(const RunConfig& cfg);

/// sweep-dm, sweep-noise and sweep-dephasing.
SweepTable cmd_sweeps(const RunConfig& cfg);

/// Grid the command will evaluate (axis values after defaults are applied).
std::vector<std::vector<double>> sweep_axes(const RunConfig& cfg);

std::string format_number(double v);
std::string theta_csv(const std::vector<ThetaRow>& rows);
std::string sweep_csv(const SweepTable& t);
std::string sweep_json(const SweepTable& t);
std::string theta_json(const std::vector<ThetaRow>& rows);
std::string gate_text(const GateReport& r);
std::string gate_json(const GateReport& r);
std::string classify_text(const ClassifyReport& r);
std::string classify_json(const ClassifyReport& r);

std::string theta_svg(const std::vector<ThetaRow>& rows);
std::string sweep_svg(const SweepTable& t);

/// Command-line entry point. Returns the process exit code:
/// 0 success, 2 configuration or parse error, 3 numerical precondition failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinholo::reports
