#include "spinholo/noise_lab.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "spinholo/errors.hpp"

namespace spinholo {

namespace {

constexpr double kTargetLeakTol = 1e-10;

double overlap_fidelity(const CMatrix& target, const CMatrix& block) {
  return std::norm((target.adjoint() * block).trace()) / 16.0;
}

void require_unitary_target(const RegisterGate& target) {
  if (target.leakage > kTargetLeakTol || unitarity_defect(target.matrix) > 1e-9) {
    std::ostringstream msg;
    msg << "process_fidelity: target is not unitary (leakage " << target.leakage << ")";
    throw NonUnitaryTarget(msg.str());
  }
}

void require_cyclic(double area, double omega, const char* who) {
  if (cyclic_winding(area, omega) < 0) {
    std::ostringstream msg;
    msg << who << ": pulse area * omega = " << area * omega / std::numbers::pi
        << " pi is not an odd multiple of pi";
    throw NonCyclicPulse(msg.str());
  }
}

// 1 + delta / Omega for a ratio Omega / delta.
double arm_scale(double ratio) {
  if (ratio == 0.0) throw std::invalid_argument("amplitude noise ratio Omega/delta must be nonzero");
  return std::isinf(ratio) ? 1.0 : 1.0 + 1.0 / ratio;
}

double dm_strength(double xy_scale, double d_ratio) {
  if (d_ratio == 0.0) throw std::invalid_argument("DM ratio d_i must be nonzero");
  return std::isinf(d_ratio) ? 0.0 : xy_scale / d_ratio;
}

RegisterGate target_gate(const ExchangeCouplings& c) {
  const PolarCouplings p = couplings_to_polar(c);
  return analytic_entangler(p.theta, p.phi1, p.phi2);
}

SweepTable grid_sweep(std::string kind, std::vector<std::string> names, std::vector<double> ax1,
                      std::vector<double> ax2, auto&& point) {
  SweepTable t;
  t.kind = std::move(kind);
  t.axis_names = std::move(names);
  const std::size_t n2 = ax2.size();
  t.fidelity = detail::parallel_map<double>(ax1.size() * n2, [&](std::size_t idx) {
    return point(ax1[idx / n2], ax2[idx % n2]);
  });
  t.axes = {std::move(ax1), std::move(ax2)};
  return t;
}

}  // namespace

double HyperfineBath::lambda() const {
  if (total_coupling == 0.0) return kInfinity;
  return nuclei_per_electron / (total_coupling * op_time);
}

HyperfineBath HyperfineBath::with_lambda(double lambda) const {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  HyperfineBath b = *this;
  b.total_coupling = std::isinf(lambda) ? 0.0 : nuclei_per_electron / (lambda * op_time);
  return b;
}

std::size_t HyperfineBath::bath_dimension() const {
  return std::size_t{1} << (3 * static_cast<std::size_t>(nuclei_per_electron));
}

std::size_t HyperfineBath::total_dimension() const { return 8 * bath_dimension(); }

double QuantumChannel::completeness_defect() const {
  if (kraus.empty()) return 1.0;
  const Eigen::Index d = kraus.front().cols();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& m : kraus) sum.noalias() += m.adjoint() * m;
  return max_abs_diff(sum, identity(d));
}

double process_fidelity(const RegisterGate& target, const RegisterGate& actual) {
  require_unitary_target(target);
  return overlap_fidelity(target.matrix, actual.matrix);
}

double process_fidelity(const RegisterGate& target, const QuantumChannel& channel) {
  require_unitary_target(target);
  double f = 0.0;
  for (const auto& m : channel.kraus) f += overlap_fidelity(target.matrix, ancilla_zero_block(m));
  return f;
}

double dm_fidelity(double j1, double j2, const DmNoise& noise, const PulsePlan& pulse) {
  const ExchangeCouplings xy{j1, j2, 0.0, 0.0};
  const double area = total_area(pulse);
  require_cyclic(area, xy.omega(), "dm_sweep");
  const double scale = std::hypot(j1, j2);
  const ExchangeCouplings perturbed{j1, j2, dm_strength(scale, noise.d1_ratio),
                                    dm_strength(scale, noise.d2_ratio)};
  // Omega(t) h_eff commutes with itself at all times, so the closed form is exact.
  const CMatrix u = propagator_closed_form(build_hamiltonians(perturbed), area);
  return process_fidelity(target_gate(xy), extract_register_gate(u));
}

SweepTable dm_sweep(double j1, double j2, const std::vector<double>& d1_ratios,
                    const std::vector<double>& d2_ratios, const PulsePlan& pulse) {
  require_cyclic(total_area(pulse), ExchangeCouplings{j1, j2, 0, 0}.omega(), "dm_sweep");
  SweepTable t = grid_sweep("sweep-dm", {"d1", "d2"}, d1_ratios, d2_ratios,
                            [&](double d1, double d2) {
                              return dm_fidelity(j1, j2, DmNoise{d1, d2}, pulse);
                            });
  t.parameters = {{"j1", j1}, {"j2", j2}, {"amplitude", pulse.amplitude},
                  {"duration", pulse.duration}};
  return t;
}

double amplitude_noise_fidelity(const ExchangeCouplings& couplings, const AmplitudeNoise& noise,
                                const PulsePlan& pulse, int steps) {
  require_cyclic(total_area(pulse), couplings.omega(), "amplitude_noise_sweep");
  auto [arm1, arm2] = build_arm_hamiltonians(couplings);
  const double s1 = arm_scale(noise.ratio1);
  const double s2 = arm_scale(noise.ratio2);
  const std::vector<DrivenTerm> parts{
      {std::move(arm1), [&pulse, s1](double t) { return s1 * pulse.envelope(t); }},
      {std::move(arm2), [&pulse, s2](double t) { return s2 * pulse.envelope(t); }},
  };
  const CMatrix u = propagator_time_ordered(parts, pulse.duration, steps);
  return process_fidelity(target_gate(couplings), extract_register_gate(u));
}

SweepTable amplitude_noise_sweep(const ExchangeCouplings& couplings,
                                 const std::vector<double>& ratios1,
                                 const std::vector<double>& ratios2, const PulsePlan& pulse,
                                 int steps) {
  require_cyclic(total_area(pulse), couplings.omega(), "amplitude_noise_sweep");
  SweepTable t = grid_sweep("sweep-noise", {"ratio1", "ratio2"}, ratios1, ratios2,
                            [&](double r1, double r2) {
                              return amplitude_noise_fidelity(couplings, AmplitudeNoise{r1, r2},
                                                              pulse, steps);
                            });
  t.parameters = {{"j1", couplings.j1},           {"j2", couplings.j2},
                  {"d1", couplings.d1},           {"d2", couplings.d2},
                  {"amplitude", pulse.amplitude}, {"duration", pulse.duration},
                  {"steps", static_cast<double>(steps)}};
  return t;
}

CMatrix build_hyperfine_hamiltonian(const HyperfineBath& bath) {
  if (bath.nuclei_per_electron < 1) {
    throw std::invalid_argument("hyperfine bath needs at least one nucleus per electron");
  }
  if (bath.nuclei_per_electron > 10 || bath.total_dimension() > bath.dimension_cap) {
    std::ostringstream msg;
    msg << "hyperfine bath with N = " << bath.nuclei_per_electron
        << " nuclei per electron needs dimension 8 * 2^" << 3 * bath.nuclei_per_electron
        << ", above the cap of " << bath.dimension_cap;
    throw DimensionOverflow(msg.str());
  }
  const int n = bath.nuclei_per_electron;
  const int bath_spins = 3 * n;
  const SpinOperators ops = build_spin_operators();
  const std::array<const CMatrix*, 3> spin{&ops.sx, &ops.sy, &ops.sz};
  const double coupling = bath.total_coupling / n;

  const auto dim = static_cast<Eigen::Index>(bath.total_dimension());
  CMatrix h = CMatrix::Zero(dim, dim);
  if (coupling == 0.0) return h;
  for (int electron = 0; electron < 3; ++electron) {
    for (int k = 0; k < n; ++k) {
      const int nucleus = electron * n + k;
      for (const CMatrix* s : spin) {
        h += coupling * kron(embed_site_operator(*s, electron, 3),
                             embed_site_operator(*s, nucleus, bath_spins));
      }
    }
  }
  return h;
}

CMatrix total_spin_z(const HyperfineBath& bath) {
  const int bath_spins = 3 * bath.nuclei_per_electron;
  const SpinOperators ops = build_spin_operators();
  const CMatrix bath_id = identity(static_cast<Eigen::Index>(bath.bath_dimension()));
  CMatrix sz = CMatrix::Zero(static_cast<Eigen::Index>(bath.total_dimension()),
                             static_cast<Eigen::Index>(bath.total_dimension()));
  for (int e = 0; e < 3; ++e) sz += kron(embed_site_operator(ops.sz, e, 3), bath_id);
  for (int k = 0; k < bath_spins; ++k) {
    sz += kron(identity(8), embed_site_operator(ops.sz, k, bath_spins));
  }
  return sz;
}

QuantumChannel channel_from_dilation(const CMatrix& u_full, std::size_t bath_dimension) {
  const auto db = static_cast<Eigen::Index>(bath_dimension);
  const Eigen::Index ds = u_full.rows() / db;
  if (ds * db != u_full.rows() || u_full.rows() != u_full.cols()) {
    throw std::invalid_argument("channel_from_dilation: dimensions do not factor");
  }
  const double weight = 1.0 / std::sqrt(static_cast<double>(db));
  QuantumChannel ch;
  ch.kraus.reserve(static_cast<std::size_t>(db * db));
  for (Eigen::Index i = 0; i < db; ++i) {
    for (Eigen::Index j = 0; j < db; ++j) {
      CMatrix m(ds, ds);
      for (Eigen::Index s = 0; s < ds; ++s) {
        for (Eigen::Index sp = 0; sp < ds; ++sp) m(s, sp) = weight * u_full(s * db + j, sp * db + i);
      }
      ch.kraus.push_back(std::move(m));
    }
  }
  return ch;
}

QuantumChannel dephasing_channel(const HyperfineBath& bath, const ExchangeCouplings& couplings,
                                 int steps) {
  const CMatrix h_hi = build_hyperfine_hamiltonian(bath);
  if (!(bath.op_time > 0.0)) throw std::invalid_argument("op_time must be positive");
  if (!(couplings.omega() > 0.0)) throw ZeroCoupling("dephasing_channel: omega must be positive");
  PulsePlan pulse;
  pulse.shape = PulseShape::square;
  pulse.amplitude = std::numbers::pi / (couplings.omega() * bath.op_time);
  pulse.duration = bath.op_time;

  const auto db = static_cast<Eigen::Index>(bath.bath_dimension());
  const std::vector<DrivenTerm> parts{
      {kron(build_hamiltonians(couplings).h_eff, identity(db)),
       [&pulse](double t) { return pulse.envelope(t); }},
      {h_hi, [](double) { return 1.0; }},
  };
  const CMatrix u = propagator_time_ordered(parts, bath.op_time, steps);
  return channel_from_dilation(u, bath.bath_dimension());
}

double dephasing_fidelity(const HyperfineBath& bath, const ExchangeCouplings& couplings,
                          int steps) {
  return process_fidelity(target_gate(couplings), dephasing_channel(bath, couplings, steps));
}

SweepTable dephasing_sweep(const HyperfineBath& bath_template, const std::vector<double>& lambdas,
                           const ExchangeCouplings& couplings, int steps) {
  // Fail on the cap before spending time on any point.
  if (bath_template.total_dimension() > bath_template.dimension_cap) {
    build_hyperfine_hamiltonian(bath_template);
  }
  SweepTable t;
  t.kind = "sweep-dephasing";
  t.axis_names = {"lambda"};
  t.axes = {lambdas};
  t.fidelity = detail::parallel_map<double>(lambdas.size(), [&](std::size_t i) {
    return dephasing_fidelity(bath_template.with_lambda(lambdas[i]), couplings, steps);
  });
  t.parameters = {{"j1", couplings.j1},
                  {"j2", couplings.j2},
                  {"d1", couplings.d1},
                  {"d2", couplings.d2},
                  {"nuclei_per_electron", static_cast<double>(bath_template.nuclei_per_electron)},
                  {"op_time", bath_template.op_time},
                  {"steps", static_cast<double>(steps)}};
  return t;
}

}  // namespace spinholo
