#include "spinholo/holonomy_gate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinholo/errors.hpp"

namespace spinholo {

RegisterGate make_register_gate(CMatrix block) {
  if (block.rows() != 4 || block.cols() != 4) {
    throw std::invalid_argument("register gate must be 4x4");
  }
  const double smin = svd(block).singular_values.back();
  RegisterGate g;
  g.leakage = std::clamp(1.0 - smin * smin, 0.0, 1.0);
  g.matrix = std::move(block);
  return g;
}

CMatrix ancilla_zero_block(const CMatrix& u) {
  const Eigen::Index half = u.rows() / 2;
  return u.block(0, 0, half, half);
}

RegisterGate extract_register_gate(const CMatrix& u_full) {
  if (u_full.rows() != 8 || u_full.cols() != 8) {
    throw std::invalid_argument("extract_register_gate: expected an 8x8 propagator");
  }
  const double defect = unitarity_defect(u_full);
  if (defect > 1e-10) {
    std::ostringstream msg;
    msg << "extract_register_gate: propagator not unitary (defect " << defect << ")";
    throw NonUnitaryInput(msg.str());
  }
  return make_register_gate(ancilla_zero_block(u_full));
}

RegisterGate analytic_entangler(double theta, double phi1, double phi2) {
  const double c2 = std::cos(2.0 * theta);
  const double s2 = std::sin(2.0 * theta);
  const Complex e = std::polar(1.0, phi1 + phi2);
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = c2;
  m(1, 2) = -e * s2;
  m(2, 1) = -std::conj(e) * s2;
  m(2, 2) = -c2;
  m(3, 3) = -1.0;
  RegisterGate g;
  g.matrix = std::move(m);
  g.leakage = 0.0;
  return g;
}

}  // namespace spinholo
