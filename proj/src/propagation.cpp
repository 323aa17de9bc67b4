#include "spinholo/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "spinholo/errors.hpp"

namespace spinholo {

namespace {

const Complex kI{0.0, 1.0};

double gaussian_value(const PulsePlan& p, double t) {
  const double sigma = p.width * p.duration;
  const double x = (t - 0.5 * p.duration) / sigma;
  return p.amplitude * std::exp(-0.5 * x * x);
}

double tabulated_value(const std::vector<PulseSample>& s, double t) {
  if (s.empty() || t < s.front().time || t > s.back().time) return 0.0;
  auto hi = std::upper_bound(s.begin(), s.end(), t,
                             [](double v, const PulseSample& x) { return v < x.time; });
  if (hi == s.end()) return s.back().value;
  auto lo = std::prev(hi);
  const double span = hi->time - lo->time;
  if (span <= 0.0) return lo->value;
  const double f = (t - lo->time) / span;
  return lo->value + f * (hi->value - lo->value);
}

// Exact integral of the piecewise-linear interpolant over [0, t].
double tabulated_area(const std::vector<PulseSample>& s, double t) {
  double area = 0.0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const double a = std::max(s[k].time, 0.0);
    const double b = std::min(s[k + 1].time, t);
    if (b <= a) continue;
    area += 0.5 * (b - a) * (tabulated_value(s, a) + tabulated_value(s, b));
  }
  return area;
}

void check_samples(const std::vector<PulseSample>& s) {
  if (s.size() < 2) throw std::invalid_argument("tabulated pulse needs at least two samples");
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!(s[k].time > s[k - 1].time)) {
      throw std::invalid_argument("tabulated pulse samples must have strictly increasing times");
    }
  }
}

}  // namespace

std::string_view to_string(PulseShape shape) {
  switch (shape) {
    case PulseShape::square: return "square";
    case PulseShape::gaussian: return "gaussian";
    case PulseShape::tabulated: return "tabulated";
  }
  return "square";
}

PulseShape pulse_shape_from_string(std::string_view name) {
  if (name == "square") return PulseShape::square;
  if (name == "gaussian") return PulseShape::gaussian;
  if (name == "tabulated") return PulseShape::tabulated;
  throw ConfigError("unknown pulse shape '" + std::string(name) +
                    "' (expected square, gaussian or tabulated)");
}

double PulsePlan::envelope(double t) const {
  if (t < 0.0 || t > duration) return 0.0;
  switch (shape) {
    case PulseShape::square: return amplitude;
    case PulseShape::gaussian: return gaussian_value(*this, t);
    case PulseShape::tabulated: return tabulated_value(samples, t);
  }
  return 0.0;
}

double pulse_area(const PulsePlan& p, double t) {
  if (!(t >= 0.0 && t <= p.duration)) {
    std::ostringstream msg;
    msg << "pulse_area: t = " << t << " outside [0, " << p.duration << "]";
    throw OutOfRange(msg.str());
  }
  if (t == 0.0) return 0.0;
  switch (p.shape) {
    case PulseShape::square:
      return p.amplitude * t;
    case PulseShape::gaussian: {
      double error = 0.0;
      const double area = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          [&](double s) { return gaussian_value(p, s); }, 0.0, t, 30, 1e-14, &error);
      return area;
    }
    case PulseShape::tabulated:
      check_samples(p.samples);
      return tabulated_area(p.samples, t);
  }
  return 0.0;
}

PulsePlan solve_cyclic(double omega, double amplitude, int winding) {
  if (!(omega > 0.0)) throw ZeroCoupling("solve_cyclic: omega must be positive");
  if (!(amplitude > 0.0)) throw std::invalid_argument("solve_cyclic: amplitude must be positive");
  if (winding < 0) throw std::invalid_argument("solve_cyclic: winding must be non-negative");
  PulsePlan p;
  p.shape = PulseShape::square;
  p.amplitude = amplitude;
  p.winding = winding;
  p.duration = (2.0 * winding + 1.0) * std::numbers::pi / (amplitude * omega);
  return p;
}

PulsePlan gaussian_with_area(double area, double duration, double width) {
  PulsePlan p;
  p.shape = PulseShape::gaussian;
  p.duration = duration;
  p.width = width;
  p.amplitude = 1.0;
  p.amplitude = area / pulse_area(p, duration);
  return p;
}

PulsePlan tabulated_with_area(std::vector<PulseSample> knots, double area) {
  check_samples(knots);
  PulsePlan p;
  p.shape = PulseShape::tabulated;
  p.duration = knots.back().time;
  p.samples = std::move(knots);
  const double raw = pulse_area(p, p.duration);
  if (!(raw > 0.0)) throw std::invalid_argument("tabulated pulse has non-positive area");
  for (auto& s : p.samples) s.value *= area / raw;
  p.amplitude = std::max_element(p.samples.begin(), p.samples.end(),
                                 [](const auto& a, const auto& b) { return a.value < b.value; })
                    ->value;
  return p;
}

int cyclic_winding(double area, double omega, double tol) {
  const double turns = area * omega / std::numbers::pi;
  const double odd = 2.0 * std::floor(0.5 * (turns - 1.0) + 0.5) + 1.0;
  if (odd < 1.0 || std::abs(turns - odd) > tol * std::max(1.0, odd)) return -1;
  return static_cast<int>((odd - 1.0) / 2.0);
}

CMatrix propagator_closed_form(const HamiltonianSet& h, double area) {
  Eigen::VectorXcd cos_t(4);
  Eigen::VectorXcd sin_t(4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    const double x = area * h.t_diag[static_cast<std::size_t>(k)];
    cos_t(k) = std::cos(x);
    // cos(x + pi/2) = -sin(x)
    sin_t(k) = -std::sin(x);
  }
  const std::array<const CMatrix*, 2> v{&h.v0, &h.v1};
  CMatrix u = CMatrix::Zero(8, 8);
  for (int l = 0; l < 2; ++l) {
    for (int k = 0; k < 2; ++k) {
      const bool off = (k != l);
      const Complex phase = off ? kI : Complex(1.0);
      const Eigen::VectorXcd& d = off ? sin_t : cos_t;
      u.block(4 * l, 4 * k, 4, 4) = phase * (*v[l]) * d.asDiagonal() * v[k]->adjoint();
    }
  }
  return u;
}

CMatrix propagator_time_ordered(std::span<const DrivenTerm> parts, double duration, int steps) {
  if (steps < 1) throw std::invalid_argument("propagator_time_ordered: steps must be >= 1");
  if (parts.empty()) throw std::invalid_argument("propagator_time_ordered: no Hamiltonian terms");
  const Eigen::Index dim = parts.front().generator.rows();
  for (const auto& part : parts) {
    if (part.generator.rows() != dim || part.generator.cols() != dim) {
      throw std::invalid_argument("propagator_time_ordered: generator dimensions differ");
    }
  }

  const double dt = duration / steps;
  auto weights_at = [&](int step) {
    const double t = (step + 0.5) * dt;
    std::vector<double> w;
    w.reserve(parts.size());
    for (const auto& part : parts) w.push_back(part.envelope(t));
    return w;
  };
  auto hamiltonian = [&](const std::vector<double>& w) {
    CMatrix h = CMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (w[k] != 0.0) h += w[k] * parts[k].generator;
    }
    return h;
  };

  CMatrix u = identity(dim);
  int step = 0;
  while (step < steps) {
    const std::vector<double> w = weights_at(step);
    int run = 1;
    while (step + run < steps && weights_at(step + run) == w) ++run;
    // Later steps multiply from the left.
    u = expm_hermitian(hamiltonian(w), run * dt) * u;
    step += run;
  }
  return u;
}

}  // namespace spinholo
