#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "spinholo/errors.hpp"
#include "spinholo/reports.hpp"

namespace spinholo::reports {

namespace {

constexpr int kThetaGrid = 101;
constexpr int kRatioGrid = 10;
constexpr int kLambdaGrid = 20;
constexpr int kRandomKnots = 17;

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n));
  if (n == 1) return {a};
  for (int k = 0; k < n; ++k) v.push_back(a + (b - a) * k / (n - 1));
  return v;
}

int grid_or(const RunConfig& cfg, int fallback) {
  const int n = cfg.grid > 0 ? cfg.grid : fallback;
  if (n < 2) throw ConfigError("config field 'grid': must be at least 2");
  return n;
}

// Finite points followed by the noise-free endpoint.
std::vector<double> ratio_axis(double lo, double hi, int n) {
  std::vector<double> v = linspace(lo, hi, n - 1);
  v.push_back(kInfinity);
  return v;
}

std::vector<double> pick_axis(const std::vector<double>& given, const std::vector<double>& fallback,
                              const RunConfig& cfg, const char* key) {
  if (given.empty()) return fallback;
  if (cfg.grid > 0 && static_cast<int>(given.size()) != cfg.grid) {
    std::ostringstream msg;
    msg << "config field '" << key << "': has " << given.size() << " entries but grid is "
        << cfg.grid;
    throw ConfigError(msg.str());
  }
  return given;
}

std::complex<double> parse_entry(std::string_view tok, std::size_t line) {
  auto fail = [&](const char* why) -> std::complex<double> {
    std::ostringstream msg;
    msg << "matrix line " << line << ": cannot parse entry '" << tok << "' (" << why << ")";
    throw ParseError(msg.str());
  };
  auto to_double = [](std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty() || s.front() == '+') return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
  };
  // Coefficient of j; a bare sign stands for +-1.
  auto to_coefficient = [&](std::string_view s, double& out) {
    if (s.empty() || s == "+") { out = 1.0; return true; }
    if (s == "-") { out = -1.0; return true; }
    return to_double(s, out);
  };
  if (tok.empty()) return fail("empty");
  const char last = tok.back();
  if (last != 'j' && last != 'J') {
    double re = 0.0;
    if (!to_double(tok, re)) return fail("not a number");
    return {re, 0.0};
  }
  const std::string_view body = tok.substr(0, tok.size() - 1);
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0;
  double im = 0.0;
  if (split == std::string_view::npos) {
    if (!to_coefficient(body, im)) return fail("bad imaginary part");
  } else {
    if (!to_double(body.substr(0, split), re)) return fail("bad real part");
    if (!to_coefficient(body.substr(split), im)) return fail("bad imaginary part");
  }
  return {re, im};
}

}  // namespace

PulsePlan make_pulse(const PulseParams& params, double omega, std::uint64_t seed) {
  const PulsePlan square = solve_cyclic(omega, params.amplitude, params.winding);
  const double area = total_area(square);
  switch (params.shape) {
    case PulseShape::square:
      return square;
    case PulseShape::gaussian: {
      PulsePlan p = gaussian_with_area(area, square.duration, params.width);
      p.winding = params.winding;
      return p;
    }
    case PulseShape::tabulated: {
      std::vector<PulseSample> knots = params.samples;
      if (knots.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> value(0.2, 1.0);
        for (int k = 0; k < kRandomKnots; ++k) {
          knots.push_back({square.duration * k / (kRandomKnots - 1), value(rng)});
        }
      }
      PulsePlan p = tabulated_with_area(std::move(knots), area);
      p.winding = params.winding;
      return p;
    }
  }
  return square;
}

GateReport cmd_gate(const RunConfig& cfg) {
  GateReport r;
  r.couplings = cfg.couplings;
  r.polar = couplings_to_polar(cfg.couplings);
  const HamiltonianSet h = build_hamiltonians(cfg.couplings);
  r.pulse = make_pulse(cfg.pulse, r.polar.omega, cfg.seed);
  CMatrix u;
  if (r.pulse.shape == PulseShape::square) {
    u = propagator_closed_form(h, total_area(r.pulse));
  } else {
    const DrivenTerm term{h.h_eff, [&](double t) { return r.pulse.envelope(t); }};
    u = propagator_time_ordered(std::span(&term, 1), r.pulse.duration, cfg.steps);
  }
  r.simulated = extract_register_gate(u);
  r.analytic = analytic_entangler(r.polar.theta, r.polar.phi1, r.polar.phi2);
  r.deviation = max_abs_diff(r.simulated.matrix, r.analytic.matrix);
  r.metrics = analyze_gate(r.simulated.matrix);
  return r;
}

CMatrix parse_matrix(std::string_view text) {
  CMatrix m(4, 4);
  std::size_t row = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> toks;
    for (std::string t; fields >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (row == 4) {
      throw ParseError("matrix line " + std::to_string(line_no) + ": more than 4 rows");
    }
    if (toks.size() != 4) {
      throw ParseError("matrix line " + std::to_string(line_no) + ": expected 4 entries, found " +
                       std::to_string(toks.size()));
    }
    for (std::size_t col = 0; col < 4; ++col) {
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = parse_entry(toks[col], line_no);
    }
    ++row;
  }
  if (row != 4) throw ParseError("matrix: expected 4 rows, found " + std::to_string(row));
  return m;
}

CMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

ClassifyReport cmd_classify(const CMatrix& m) {
  const double defect = unitarity_defect(m);
  if (defect > 1e-8) {
    std::ostringstream msg;
    msg << "classify: matrix is not unitary (max |U^dagger U - I| = " << defect << ")";
    throw NonUnitaryInput(msg.str());
  }
  // Snap to the nearest unitary so hand-typed digits pass the tighter checks downstream.
  const SvdResult f = svd(m);
  ClassifyReport r;
  r.matrix = f.u * f.v.adjoint();
  r.metrics = analyze_gate(r.matrix);
  return r;
}

std::vector<ThetaRow> cmd_sweep_theta(const RunConfig& cfg) {
  const int n = grid_or(cfg, kThetaGrid);
  double scale = std::hypot(cfg.couplings.j1, cfg.couplings.j2);
  if (scale == 0.0) scale = 1.0;
  std::vector<ThetaRow> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (double theta : linspace(0.0, std::numbers::pi / 4, n)) {
    const ExchangeCouplings c{scale * std::cos(theta), scale * std::sin(theta), 0.0, 0.0};
    const HamiltonianSet h = build_hamiltonians(c);
    const PulsePlan p = solve_cyclic(h.polar.omega, cfg.pulse.amplitude, cfg.pulse.winding);
    const RegisterGate g = extract_register_gate(propagator_closed_form(h, total_area(p)));
    rows.push_back({theta, analyze_gate(g.matrix)});
  }
  return rows;
}

std::vector<std::vector<double>> sweep_axes(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::sweep_dm: {
      const auto fallback = ratio_axis(1.0, 10.0, grid_or(cfg, kRatioGrid));
      auto d1 = pick_axis(cfg.d1_ratios, fallback, cfg, "d1_ratios");
      auto d2 = pick_axis(cfg.d2_ratios, cfg.d1_ratios.empty() ? fallback : d1, cfg, "d2_ratios");
      return {d1, d2};
    }
    case Command::sweep_noise: {
      const auto fallback = ratio_axis(10.0, 100.0, grid_or(cfg, kRatioGrid));
      auto r1 = pick_axis(cfg.ratios1, fallback, cfg, "ratios1");
      auto r2 = pick_axis(cfg.ratios2, cfg.ratios1.empty() ? fallback : r1, cfg, "ratios2");
      return {r1, r2};
    }
    case Command::sweep_dephasing:
      return {pick_axis(cfg.lambdas, linspace(1.0, 20.0, grid_or(cfg, kLambdaGrid)), cfg,
                        "lambdas")};
    default:
      throw ConfigError("command '" + std::string(to_string(cfg.command)) + "' is not a noise sweep");
  }
}

SweepTable cmd_sweeps(const RunConfig& cfg) {
  const auto axes = sweep_axes(cfg);
  const ExchangeCouplings& c = cfg.couplings;
  switch (cfg.command) {
    case Command::sweep_dm: {
      if (c.d1 != 0.0 || c.d2 != 0.0) {
        throw ConfigError("sweep-dm: set d1 = d2 = 0; the DM strength comes from d1_ratios/d2_ratios");
      }
      const PulsePlan p = make_pulse(cfg.pulse, c.omega(), cfg.seed);
      return dm_sweep(c.j1, c.j2, axes[0], axes[1], p);
    }
    case Command::sweep_noise: {
      const PulsePlan p = make_pulse(cfg.pulse, c.omega(), cfg.seed);
      return amplitude_noise_sweep(c, axes[0], axes[1], p, cfg.steps);
    }
    case Command::sweep_dephasing: {
      if (cfg.pulse.shape != PulseShape::square) {
        throw ConfigError("sweep-dephasing: only the square pulse is supported");
      }
      HyperfineBath bath;
      bath.nuclei_per_electron = cfg.nuclei_per_electron;
      bath.op_time = cfg.op_time;
      return dephasing_sweep(bath, axes[0], c, cfg.steps);
    }
    default:
      throw ConfigError("command '" + std::string(to_string(cfg.command)) + "' is not a noise sweep");
  }
}

}  // namespace spinholo::reports
