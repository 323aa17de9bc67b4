#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spinholo/errors.hpp"
#include "spinholo/reports.hpp"

namespace spinholo::reports {

using nlohmann::json;

namespace {

const std::set<std::string, std::less<>> kKnownKeys{
    "command",   "j1",        "j2",      "d1",        "d2",     "shape",
    "amplitude", "winding",   "width",   "samples",   "d1_ratios", "d2_ratios",
    "ratios1",   "ratios2",   "lambdas", "nuclei_per_electron", "op_time",
    "matrix",    "output",    "format",  "grid",      "steps",  "seed"};

[[noreturn]] void field_error(std::string_view key, std::string_view what) {
  throw ConfigError("config field '" + std::string(key) + "': " + std::string(what));
}

double as_number(const json& v, std::string_view key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity") return kInfinity;
    if (s == "-inf" || s == "-infinity") return -kInfinity;
  }
  field_error(key, "expected a number (or \"inf\"), got " + v.dump());
}

double finite_number(const json& v, std::string_view key) {
  const double x = as_number(v, key);
  if (!std::isfinite(x)) field_error(key, "must be finite");
  return x;
}

long long as_integer(const json& v, std::string_view key) {
  if (!v.is_number_integer()) field_error(key, "expected an integer, got " + v.dump());
  return v.get<long long>();
}

std::vector<double> as_list(const json& v, std::string_view key) {
  if (!v.is_array()) field_error(key, "expected a list of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(as_number(x, key));
  return out;
}

std::string as_string(const json& v, std::string_view key) {
  if (!v.is_string()) field_error(key, "expected a string, got " + v.dump());
  return v.get<std::string>();
}

json number_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json list_to_json(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(number_to_json(x));
  return a;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::gate: return "gate";
    case Command::sweep_theta: return "sweep-theta";
    case Command::sweep_dm: return "sweep-dm";
    case Command::sweep_noise: return "sweep-noise";
    case Command::sweep_dephasing: return "sweep-dephasing";
    case Command::classify: return "classify";
  }
  return "gate";
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::svg: return "svg";
  }
  return "csv";
}

Command command_from_string(std::string_view s) {
  for (auto c : {Command::gate, Command::sweep_theta, Command::sweep_dm, Command::sweep_noise,
                 Command::sweep_dephasing, Command::classify}) {
    if (to_string(c) == s) return c;
  }
  throw ConfigError("unknown command '" + std::string(s) +
                    "' (expected gate, sweep-theta, sweep-dm, sweep-noise, sweep-dephasing "
                    "or classify)");
}

OutputFormat format_from_string(std::string_view s) {
  for (auto f : {OutputFormat::csv, OutputFormat::json, OutputFormat::svg}) {
    if (to_string(f) == s) return f;
  }
  throw ConfigError("unknown format '" + std::string(s) + "' (expected csv, json or svg)");
}

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << "config line " << line_of(text, e.byte) << ": malformed JSON (" << e.what() << ")";
    throw ConfigError(msg.str());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  for (const auto& [key, _] : doc.items()) {
    if (!kKnownKeys.contains(key)) {
      // Locate the offending key for the diagnostic.
      const auto pos = text.find("\"" + key + "\"");
      std::ostringstream msg;
      msg << "config";
      if (pos != std::string_view::npos) msg << " line " << line_of(text, pos);
      msg << ": unknown field '" << key << "'";
      throw ConfigError(msg.str());
    }
  }

  RunConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "command") cfg.command = command_from_string(as_string(v, key));
    else if (key == "j1") cfg.couplings.j1 = finite_number(v, key);
    else if (key == "j2") cfg.couplings.j2 = finite_number(v, key);
    else if (key == "d1") cfg.couplings.d1 = finite_number(v, key);
    else if (key == "d2") cfg.couplings.d2 = finite_number(v, key);
    else if (key == "shape") cfg.pulse.shape = pulse_shape_from_string(as_string(v, key));
    else if (key == "amplitude") cfg.pulse.amplitude = finite_number(v, key);
    else if (key == "winding") cfg.pulse.winding = static_cast<int>(as_integer(v, key));
    else if (key == "width") cfg.pulse.width = finite_number(v, key);
    else if (key == "samples") {
      if (!v.is_array()) field_error(key, "expected a list of [time, value] pairs");
      for (const auto& pair : v) {
        if (!pair.is_array() || pair.size() != 2) field_error(key, "expected [time, value], got " + pair.dump());
        cfg.pulse.samples.push_back({finite_number(pair[0], key), finite_number(pair[1], key)});
      }
    }
    else if (key == "d1_ratios") cfg.d1_ratios = as_list(v, key);
    else if (key == "d2_ratios") cfg.d2_ratios = as_list(v, key);
    else if (key == "ratios1") cfg.ratios1 = as_list(v, key);
    else if (key == "ratios2") cfg.ratios2 = as_list(v, key);
    else if (key == "lambdas") cfg.lambdas = as_list(v, key);
    else if (key == "nuclei_per_electron") cfg.nuclei_per_electron = static_cast<int>(as_integer(v, key));
    else if (key == "op_time") cfg.op_time = finite_number(v, key);
    else if (key == "matrix") cfg.matrix = as_string(v, key);
    else if (key == "output") cfg.output = as_string(v, key);
    else if (key == "format") cfg.format = format_from_string(as_string(v, key));
    else if (key == "grid") cfg.grid = static_cast<int>(as_integer(v, key));
    else if (key == "steps") cfg.steps = static_cast<int>(as_integer(v, key));
    else if (key == "seed") {
      if (!v.is_number_unsigned()) field_error(key, "expected a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    }
  }

  if (cfg.grid < 0) field_error("grid", "must be non-negative");
  if (cfg.steps < 1) field_error("steps", "must be at least 1");
  if (cfg.pulse.winding < 0) field_error("winding", "must be non-negative");
  if (!(cfg.pulse.amplitude > 0.0)) field_error("amplitude", "must be positive");
  if (!(cfg.pulse.width > 0.0)) field_error("width", "must be positive");
  if (!(cfg.op_time > 0.0)) field_error("op_time", "must be positive");
  if (cfg.nuclei_per_electron < 1) field_error("nuclei_per_electron", "must be at least 1");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const RunConfig& cfg) {
  json doc;
  doc["command"] = to_string(cfg.command);
  doc["j1"] = cfg.couplings.j1;
  doc["j2"] = cfg.couplings.j2;
  doc["d1"] = cfg.couplings.d1;
  doc["d2"] = cfg.couplings.d2;
  doc["shape"] = to_string(cfg.pulse.shape);
  doc["amplitude"] = cfg.pulse.amplitude;
  doc["winding"] = cfg.pulse.winding;
  doc["width"] = cfg.pulse.width;
  json samples = json::array();
  for (const auto& s : cfg.pulse.samples) samples.push_back({s.time, s.value});
  doc["samples"] = samples;
  doc["d1_ratios"] = list_to_json(cfg.d1_ratios);
  doc["d2_ratios"] = list_to_json(cfg.d2_ratios);
  doc["ratios1"] = list_to_json(cfg.ratios1);
  doc["ratios2"] = list_to_json(cfg.ratios2);
  doc["lambdas"] = list_to_json(cfg.lambdas);
  doc["nuclei_per_electron"] = cfg.nuclei_per_electron;
  doc["op_time"] = cfg.op_time;
  doc["matrix"] = cfg.matrix;
  doc["output"] = cfg.output;
  doc["format"] = to_string(cfg.format);
  doc["grid"] = cfg.grid;
  doc["steps"] = cfg.steps;
  doc["seed"] = cfg.seed;
  return doc.dump(2) + "\n";
}

}  // namespace spinholo::reports
