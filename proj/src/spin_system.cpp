#include "spinholo/spin_system.hpp"

#include <cmath>

#include "spinholo/errors.hpp"

namespace spinholo {

namespace {

constexpr int kSites = 3;
const Complex kI{0.0, 1.0};

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

// J (S^l_x S^r_x + S^l_y S^r_y) + D (S^l_x S^r_y - S^l_y S^r_x) for the bond (l, r).
CMatrix bond_term(const SpinOperators& ops, Site left, Site right, double j, double d) {
  const CMatrix& lx = ops.at(left, Axis::x);
  const CMatrix& ly = ops.at(left, Axis::y);
  const CMatrix& rx = ops.at(right, Axis::x);
  const CMatrix& ry = ops.at(right, Axis::y);
  return j * (lx * rx + ly * ry) + d * (lx * ry - ly * rx);
}

}  // namespace

double ExchangeCouplings::omega() const {
  return std::sqrt(std::norm(alpha1()) + std::norm(alpha2()));
}

Complex PolarCouplings::alpha1() const { return omega * std::polar(1.0, phi1) * std::cos(theta); }
Complex PolarCouplings::alpha2() const { return omega * std::polar(1.0, phi2) * std::sin(theta); }

PolarCouplings couplings_to_polar(const ExchangeCouplings& c) {
  const Complex a1 = c.alpha1();
  const Complex a2 = c.alpha2();
  PolarCouplings p;
  p.omega = c.omega();
  if (!(p.omega > 0.0)) {
    throw ZeroCoupling("couplings_to_polar: all exchange couplings vanish (omega = 0)");
  }
  p.theta = std::atan2(std::abs(a2), std::abs(a1));
  p.phi1 = std::abs(a1) > 0.0 ? std::arg(a1) : 0.0;
  p.phi2 = std::abs(a2) > 0.0 ? std::arg(a2) : 0.0;
  return p;
}

ExchangeCouplings polar_to_couplings(const PolarCouplings& p) {
  const Complex a1 = p.alpha1();
  const Complex a2 = p.alpha2();
  return ExchangeCouplings{2.0 * a1.real(), 2.0 * a2.real(), 2.0 * a1.imag(), 2.0 * a2.imag()};
}

CMatrix embed_site_operator(const CMatrix& op, int site, int n_sites) {
  CMatrix out = identity(1);
  for (int k = 0; k < n_sites; ++k) {
    out = kron(out, k == site ? op : identity(op.rows()));
  }
  return out;
}

SpinOperators build_spin_operators() {
  SpinOperators ops;
  ops.sx = 0.5 * pauli_x();
  ops.sy = 0.5 * pauli_y();
  ops.sz = 0.5 * pauli_z();
  ops.splus = ops.sx + kI * ops.sy;
  const std::array<const CMatrix*, 4> single{&ops.sx, &ops.sy, &ops.sz, &ops.splus};
  for (int site = 0; site < kSites; ++site) {
    for (std::size_t axis = 0; axis < single.size(); ++axis) {
      ops.embedded[static_cast<std::size_t>(site)][axis] =
          embed_site_operator(*single[axis], site, kSites);
    }
  }
  return ops;
}

std::pair<CMatrix, CMatrix> build_arm_hamiltonians(const ExchangeCouplings& c) {
  const SpinOperators ops = build_spin_operators();
  return {bond_term(ops, Site::register1, Site::ancilla, c.j1, c.d1),
          bond_term(ops, Site::ancilla, Site::register2, c.j2, c.d2)};
}

CMatrix build_xy_hamiltonian(double j1, double j2) {
  auto [arm1, arm2] = build_arm_hamiltonians(ExchangeCouplings{j1, j2, 0.0, 0.0});
  return arm1 + arm2;
}

CMatrix exchange_matrix(const ExchangeCouplings& c) {
  const Complex a1 = c.alpha1();
  const Complex a2 = c.alpha2();
  CMatrix w = CMatrix::Zero(4, 4);
  w(1, 0) = a2;
  w(2, 0) = std::conj(a1);
  w(3, 1) = std::conj(a1);
  w(3, 2) = a2;
  return w;
}

CMatrix closed_form_v0(const PolarCouplings& p) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const Complex e1 = std::polar(1.0, p.phi1);
  const Complex e2 = std::polar(1.0, p.phi2);
  CMatrix v = CMatrix::Zero(4, 4);
  v(0, 0) = 1.0;
  v(1, 1) = e1 * c;
  v(1, 3) = e2 * s;
  v(2, 1) = -std::conj(e2) * s;
  v(2, 3) = std::conj(e1) * c;
  v(3, 2) = 1.0;
  return v;
}

CMatrix closed_form_v1(const PolarCouplings& p) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const Complex e1 = std::polar(1.0, p.phi1);
  const Complex e2 = std::polar(1.0, p.phi2);
  CMatrix v = CMatrix::Zero(4, 4);
  v(0, 3) = 1.0;
  v(1, 1) = e2 * s;
  v(1, 2) = e1 * c;
  v(2, 1) = -std::conj(e1) * c;
  v(2, 2) = std::conj(e2) * s;
  v(3, 0) = 1.0;
  return v;
}

HamiltonianSet build_hamiltonians(const ExchangeCouplings& c) {
  HamiltonianSet h;
  h.h_xy = build_xy_hamiltonian(c.j1, c.j2);
  auto [dm1, dm2] = build_arm_hamiltonians(ExchangeCouplings{0.0, 0.0, c.d1, c.d2});
  h.h_dm = dm1 + dm2;
  h.h_eff = h.h_xy + h.h_dm;
  h.w = exchange_matrix(c);
  if (c.omega() > 0.0) {
    h.polar = couplings_to_polar(c);
  }
  h.v0 = closed_form_v0(h.polar);
  h.v1 = closed_form_v1(h.polar);
  h.t_diag = {0.0, 0.0, h.polar.omega, h.polar.omega};
  return h;
}

CMatrix ancilla_zero_projector() {
  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  return kron(p0, identity(4));
}

CMatrix ancilla_parity() { return kron(pauli_z(), identity(4)); }

}  // namespace spinholo
