#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "spinholo/numerics.hpp"
#include "spinholo/spin_system.hpp"

namespace spinholo {

enum class PulseShape { square, gaussian, tabulated };

std::string_view to_string(PulseShape shape);
PulseShape pulse_shape_from_string(std::string_view name);

struct PulseSample {
  double time = 0.0;
  double value = 0.0;

  friend bool operator==(const PulseSample&, const PulseSample&) = default;
};

/// Envelope Omega(t) on [0, duration] that scales every exchange coupling.
///
/// square:    Omega(t) = amplitude.
/// gaussian:  amplitude * exp(-(t - duration/2)^2 / (2 sigma^2)), sigma = width * duration.
/// tabulated: piecewise-linear interpolation through `samples`, zero outside them.
struct PulsePlan {
  PulseShape shape = PulseShape::square;
  double amplitude = 1.0;
  double duration = 1.0;
  int winding = 0;
  double width = 0.125;
  std::vector<PulseSample> samples;

  double envelope(double t) const;
};

/// a_t = integral of the envelope over [0, t]. Throws OutOfRange for t outside
/// [0, duration].
double pulse_area(const PulsePlan& p, double t);

inline double total_area(const PulsePlan& p) { return pulse_area(p, p.duration); }

/// Square pulse with a_tau * omega = (2 * winding + 1) * pi.
PulsePlan solve_cyclic(double omega, double amplitude, int winding);

/// Gaussian pulse on [0, duration] rescaled so that its area equals `area`.
PulsePlan gaussian_with_area(double area, double duration, double width);

/// Tabulated pulse through the given knots, rescaled to total area `area`.
PulsePlan tabulated_with_area(std::vector<PulseSample> knots, double area);

/// Odd multiple n such that area * omega ~ (2n + 1) pi, if within `tol`
/// (measured on area * omega / pi); -1 otherwise.
int cyclic_winding(double area, double omega, double tol = 1e-9);

/// Full 8x8 propagator exp(-i a h_eff) assembled from the closed-form SVD
/// factors: sum_{k,l} i^{|k-l|} |l><k| (x) V_l cos(a T + |k-l| pi/2) V_k^dagger.
CMatrix propagator_closed_form(const HamiltonianSet& h, double area);

using Envelope = std::function<double(double)>;

struct DrivenTerm {
  CMatrix generator;
  Envelope envelope;
};

/// Ordered product of midpoint-rule step exponentials of sum_k env_k(t) H_k.
/// Runs of consecutive steps whose instantaneous Hamiltonian is identical are
/// exponentiated in one go, which is exact for that run.
CMatrix propagator_time_ordered(std::span<const DrivenTerm> parts, double duration, int steps);

inline constexpr int kDefaultSteps = 200;

}  // namespace spinholo
