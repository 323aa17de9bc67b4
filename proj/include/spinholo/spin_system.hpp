#pragma once

#include <array>
#include <utility>

#include "spinholo/numerics.hpp"

// Three-spin chain a - 1 - 2 with the ancilla a in the middle. Natural units
// (hbar = 1); couplings are angular frequencies. The 8-dimensional basis is
// |s_a s_1 s_2> with s = 0 meaning spin up, enumerated lexicographically, so
// the ancilla is the leftmost tensor factor.

namespace spinholo {

/// Bare exchange strengths J_1, J_2 (XY) and D^z_1, D^z_2 (Dzyaloshinskii-Moriya).
struct ExchangeCouplings {
  double j1 = 0.0;
  double j2 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  Complex alpha1() const { return 0.5 * Complex(j1, d1); }
  Complex alpha2() const { return 0.5 * Complex(j2, d2); }
  double omega() const;

  friend bool operator==(const ExchangeCouplings&, const ExchangeCouplings&) = default;
};

/// alpha_1 = omega e^{i phi1} cos(theta), alpha_2 = omega e^{i phi2} sin(theta).
struct PolarCouplings {
  double omega = 0.0;
  double theta = 0.0;  // [0, pi/2]
  double phi1 = 0.0;   // (-pi, pi]
  double phi2 = 0.0;   // (-pi, pi]

  Complex alpha1() const;
  Complex alpha2() const;
};

PolarCouplings couplings_to_polar(const ExchangeCouplings& c);
ExchangeCouplings polar_to_couplings(const PolarCouplings& p);

enum class Site { ancilla = 0, register1 = 1, register2 = 2 };
enum class Axis { x = 0, y = 1, z = 2, plus = 3 };

struct SpinOperators {
  CMatrix sx, sy, sz, splus;  // 2x2, S = sigma / 2
  std::array<std::array<CMatrix, 4>, 3> embedded;  // [site][axis], 8x8

  const CMatrix& at(Site site, Axis axis) const {
    return embedded[static_cast<std::size_t>(site)][static_cast<std::size_t>(axis)];
  }
};

SpinOperators build_spin_operators();

/// Single-site spin-1/2 operators (sx, sy, sz) embedded at position `site`
/// of an n_sites chain with `site` counted from the left.
CMatrix embed_site_operator(const CMatrix& op, int site, int n_sites);

struct HamiltonianSet {
  CMatrix h_xy;   // 8x8
  CMatrix h_dm;   // 8x8
  CMatrix h_eff;  // h_xy + h_dm; H_eff(t) = Omega(t) * h_eff
  CMatrix w;      // 4x4 exchange matrix, upper-right ancilla block of h_eff
  CMatrix v0;     // closed-form left singular vectors of w
  std::array<double, 4> t_diag{};  // (0, 0, omega, omega)
  CMatrix v1;     // closed-form right singular vectors of w
  PolarCouplings polar;
};

/// Coupling terms of the two arms separately: first the (1, a) bond with J_1,
/// D^z_1, then the (a, 2) bond with J_2, D^z_2. Their sum is h_eff.
std::pair<CMatrix, CMatrix> build_arm_hamiltonians(const ExchangeCouplings& c);

/// XY part only (D terms dropped).
CMatrix build_xy_hamiltonian(double j1, double j2);

/// Exchange matrix acting on the register pair |s_1 s_2>.
CMatrix exchange_matrix(const ExchangeCouplings& c);

/// Closed-form SVD factors of the exchange matrix, w = v0 * diag(t) * v1^dagger.
CMatrix closed_form_v0(const PolarCouplings& p);
CMatrix closed_form_v1(const PolarCouplings& p);

/// Builds every operator for a coupling set. Zero couplings are accepted; the
/// polar angles then default to zero and w vanishes.
HamiltonianSet build_hamiltonians(const ExchangeCouplings& c);

/// Projector onto the ancilla-|0> subspace, kron(|0><0|, I_4).
CMatrix ancilla_zero_projector();

/// kron(sigma_z, I_4); h_eff anticommutes with it.
CMatrix ancilla_parity();

}  // namespace spinholo
