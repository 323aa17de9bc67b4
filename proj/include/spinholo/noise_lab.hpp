#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spinholo/holonomy_gate.hpp"
#include "spinholo/numerics.hpp"
#include "spinholo/propagation.hpp"
#include "spinholo/spin_system.hpp"

// Robustness studies of the holonomic entangler. Fidelity throughout is the
// process fidelity on the 4-dimensional register block,
//
//   F = sum_k |tr(V^dagger M_k)|^2 / 16,
//
// which reduces to |tr(V^dagger U)|^2 / 16 for a single operator and counts
// leaked amplitude as lost. Average gate fidelity follows as (4F + 1) / 5.

namespace spinholo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Dzyaloshinskii-Moriya perturbation: D^z_i = sqrt(J1^2 + J2^2) / d_i.
/// d_i = inf switches the term off.
struct DmNoise {
  double d1_ratio = kInfinity;
  double d2_ratio = kInfinity;
};

/// Per-arm amplitude offsets Omega_i = Omega + delta_i, given as ratios
/// Omega / delta_i. ratio = inf means delta_i = 0.
struct AmplitudeNoise {
  double ratio1 = kInfinity;
  double ratio2 = kInfinity;
};

/// Exactly one noise family per run.
using NoiseConfig = std::variant<DmNoise, AmplitudeNoise>;

/// Homogeneous Fermi-contact bath: every electron couples to its own N
/// spin-1/2 nuclei with A_{l;k} = A / N.
struct HyperfineBath {
  int nuclei_per_electron = 2;
  double total_coupling = 0.0;  // A, angular frequency
  double op_time = 1.0;         // tau_op
  std::size_t dimension_cap = 4096;

  /// lambda = tau_hf / tau_op = N / (A tau_op); inf when A = 0.
  double lambda() const;
  /// Copy of this bath with A chosen so that lambda() == lambda.
  HyperfineBath with_lambda(double lambda) const;
  std::size_t bath_dimension() const;
  std::size_t total_dimension() const;
};

struct QuantumChannel {
  std::vector<CMatrix> kraus;

  /// max |sum_k M_k^dagger M_k - I|
  double completeness_defect() const;
};

/// Throws NonUnitaryTarget when the target leaks more than 1e-10.
double process_fidelity(const RegisterGate& target, const RegisterGate& actual);
/// Kraus operators of the full system are restricted to the ancilla-|0> block.
double process_fidelity(const RegisterGate& target, const QuantumChannel& channel);

/// Axis values plus a fidelity grid (row-major over the axes, last axis
/// fastest) and the parameters needed to rerun it.
struct SweepTable {
  std::string kind;
  std::vector<std::string> axis_names;
  std::vector<std::vector<double>> axes;
  std::vector<double> fidelity;
  std::vector<std::pair<std::string, double>> parameters;

  std::size_t rows() const { return fidelity.size(); }
};

/// Gate realised with the XY couplings (j1, j2) plus the DM perturbation,
/// driven by a pulse calibrated for the XY-only omega. Throws NonCyclicPulse.
double dm_fidelity(double j1, double j2, const DmNoise& noise, const PulsePlan& pulse);

SweepTable dm_sweep(double j1, double j2, const std::vector<double>& d1_ratios,
                    const std::vector<double>& d2_ratios, const PulsePlan& pulse);

/// Arms driven independently with envelopes scaled by (1 + 1/ratio_i) and
/// propagated by time-ordered stepping. Throws NonCyclicPulse.
double amplitude_noise_fidelity(const ExchangeCouplings& couplings, const AmplitudeNoise& noise,
                                const PulsePlan& pulse, int steps = kDefaultSteps);

SweepTable amplitude_noise_sweep(const ExchangeCouplings& couplings,
                                 const std::vector<double>& ratios1,
                                 const std::vector<double>& ratios2, const PulsePlan& pulse,
                                 int steps = kDefaultSteps);

/// sum_l sum_k (A/N) S^(l) . I^(l,k) on system (x) bath, system factors
/// (a, 1, 2) leftmost, then the nuclei of a, of 1 and of 2.
/// Throws DimensionOverflow when 8 * 2^(3N) exceeds bath.dimension_cap.
CMatrix build_hyperfine_hamiltonian(const HyperfineBath& bath);

/// Total S_z of electrons and nuclei on the same space.
CMatrix total_spin_z(const HyperfineBath& bath);

/// Kraus operators M_ij = <j| U |i>_bath / sqrt(dim_bath) for a maximally
/// mixed bath.
QuantumChannel channel_from_dilation(const CMatrix& u_full, std::size_t bath_dimension);

/// Full system-bath evolution under a square cyclic pulse of length
/// bath.op_time followed by Kraus extraction.
QuantumChannel dephasing_channel(const HyperfineBath& bath, const ExchangeCouplings& couplings,
                                 int steps = kDefaultSteps);

double dephasing_fidelity(const HyperfineBath& bath, const ExchangeCouplings& couplings,
                          int steps = kDefaultSteps);

SweepTable dephasing_sweep(const HyperfineBath& bath_template, const std::vector<double>& lambdas,
                           const ExchangeCouplings& couplings, int steps = kDefaultSteps);

}  // namespace spinholo
