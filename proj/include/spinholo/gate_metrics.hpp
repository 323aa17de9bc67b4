#pragma once

#include <string_view>

#include "spinholo/numerics.hpp"

// Local-equivalence classification of two-qubit gates.
//
// Weyl coordinates follow the convention U ~ k1 exp(i/2 (c1 XX + c2 YY + c3 ZZ)) k2
// with the canonical chamber O A1 A2 A3,
//   O = (0,0,0), A1 = (pi,0,0), A2 = (pi/2,pi/2,0), A3 = (pi/2,pi/2,pi/2),
// i.e. pi >= c1 >= c2 >= c3 >= 0, c1 + c2 <= pi, and c1 <= pi/2 on the base c3 = 0.

namespace spinholo {

struct MakhlinInvariants {
  Complex g1;
  double g2 = 0.0;
};

struct WeylPoint {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

enum class EntanglerClass { local, entangling, perfect, special_perfect };

std::string_view to_string(EntanglerClass c);

inline bool is_perfect_entangler(EntanglerClass c) {
  return c == EntanglerClass::perfect || c == EntanglerClass::special_perfect;
}

struct GateMetrics {
  Complex g1;
  double g2 = 0.0;
  WeylPoint weyl;
  double ep = 0.0;
  EntanglerClass entangler_class = EntanglerClass::local;
};

/// Q = (1/sqrt 2) [[1,0,0,i],[0,i,1,0],[0,i,-1,0],[1,0,0,-i]]
const CMatrix& magic_basis();

/// G1 = tr^2(m) / (16 det U), G2 = (tr^2(m) - tr(m^2)) / (4 det U) with
/// m = (Q^dagger U Q)^T (Q^dagger U Q). Throws NonUnitaryInput.
MakhlinInvariants makhlin_invariants(const CMatrix& u);

/// Canonical chamber point of a 4x4 unitary. Throws NonUnitaryInput.
WeylPoint weyl_coordinates(const CMatrix& u);

/// Maps any coordinate triple to its representative in the canonical chamber.
WeylPoint canonicalize_weyl(WeylPoint raw);

bool is_canonical(const WeylPoint& w, double tol = 1e-9);

/// G1 = (cos c1 cos c2 cos c3 + i sin c1 sin c2 sin c3)^2,
/// G2 = cos 2c1 + cos 2c2 + cos 2c3.
MakhlinInvariants invariants_from_weyl(const WeylPoint& w);

/// (2/9)(1 - |g1|), clamped to [0, 2/9].
double entangling_power(Complex g1);

/// Throws NonCanonicalInput when `w` is outside the chamber by more than 1e-9.
EntanglerClass classify_entangler(const WeylPoint& w);

GateMetrics analyze_gate(const CMatrix& u);

}  // namespace spinholo
