#pragma once

#include "spinholo/numerics.hpp"

namespace spinholo {

/// Two-qubit operator on the register pair, basis |s_1 s_2> = 00, 01, 10, 11.
///
/// `leakage` = 1 - sigma_min(matrix)^2: the worst-case probability that a
/// register state started with the ancilla in |0> ends outside that subspace.
struct RegisterGate {
  CMatrix matrix;
  double leakage = 0.0;
};

/// Wraps a 4x4 block, computing its leakage from the singular values.
RegisterGate make_register_gate(CMatrix block);

/// Upper-left 4x4 block <0, i| U |0, j> of an operator whose leftmost tensor
/// factor is the ancilla.
CMatrix ancilla_zero_block(const CMatrix& u);

/// Register gate realised by an 8x8 propagator. Throws NonUnitaryInput when
/// the propagator is not unitary within 1e-10.
RegisterGate extract_register_gate(const CMatrix& u_full);

/// Closed-form holonomic entangler
///
///   [1      0                          0                         0]
///   [0      cos 2t                    -e^{i(p1+p2)} sin 2t       0]
///   [0     -e^{-i(p1+p2)} sin 2t      -cos 2t                    0]
///   [0      0                          0                        -1]
///
/// i.e. V0 diag(1, 1, -1, -1) V0^dagger.
RegisterGate analytic_entangler(double theta, double phi1, double phi2);

}  // namespace spinholo
