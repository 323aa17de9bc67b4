#include <gtest/gtest.h>

#include "spinholo/errors.hpp"
#include "spinholo/spin_system.hpp"
#include "support.hpp"

using namespace spinholo;
using testsupport::kPi;
using testsupport::max_diff;

namespace {

Eigen::VectorXcd basis(Eigen::Index n, Eigen::Index k) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v(k) = 1.0;
  return v;
}

}  // namespace

TEST(SpinOperators, RaisingOperator) {
  const SpinOperators ops = build_spin_operators();
  // |0> is spin up.
  EXPECT_LE((ops.splus * basis(2, 1) - basis(2, 0)).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LE((ops.splus * basis(2, 0)).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LE(max_diff(ops.splus, ops.sx + Complex(0, 1) * ops.sy), 1e-15);
}

TEST(SpinOperators, HalfPaulis) {
  const SpinOperators ops = build_spin_operators();
  EXPECT_LE(max_diff(ops.sx, 0.5 * testsupport::pauli('x')), 0.0);
  EXPECT_LE(max_diff(ops.sy, 0.5 * testsupport::pauli('y')), 0.0);
  EXPECT_LE(max_diff(ops.sz, 0.5 * testsupport::pauli('z')), 0.0);
}

TEST(SpinOperators, EmbeddingOrder) {
  const SpinOperators ops = build_spin_operators();
  EXPECT_LE(max_diff(ops.at(Site::ancilla, Axis::x), kron(ops.sx, identity(4))), 0.0);
  const char axes[] = {'x', 'y', 'z'};
  for (int site = 0; site < 3; ++site) {
    for (int a = 0; a < 3; ++a) {
      EXPECT_LE(max_diff(ops.at(static_cast<Site>(site), static_cast<Axis>(a)),
                         testsupport::spin3(site, axes[a])),
                1e-15);
    }
  }
  EXPECT_LE(max_diff(embed_site_operator(ops.sz, 1, 3), testsupport::spin3(1, 'z')), 0.0);
}

TEST(Polar, EqualRealCouplings) {
  const double j = 1.7;
  const PolarCouplings p = couplings_to_polar({j, j, 0.0, 0.0});
  EXPECT_NEAR(p.theta, kPi / 4, 1e-15);
  EXPECT_NEAR(p.phi1, 0.0, 1e-15);
  EXPECT_NEAR(p.phi2, 0.0, 1e-15);
  EXPECT_NEAR(p.omega, j / std::sqrt(2.0), 1e-15);
}

TEST(Polar, SingleArm) {
  EXPECT_NEAR(couplings_to_polar({0.8, 0.0, 0.0, 0.0}).theta, 0.0, 0.0);
  const double d = 1.3;
  const PolarCouplings p = couplings_to_polar({0.0, 0.0, 0.0, d});
  EXPECT_NEAR(p.theta, kPi / 2, 1e-15);
  EXPECT_NEAR(p.phi2, kPi / 2, 1e-15);
  EXPECT_NEAR(p.omega, d / 2, 1e-15);
}

TEST(Polar, ZeroCouplingsRejected) {
  EXPECT_THROW(couplings_to_polar({0, 0, 0, 0}), ZeroCoupling);
}

TEST(Polar, RoundTripAndAlphaReproduction) {
  for (int trial = 0; trial < 1000; ++trial) {
    const ExchangeCouplings c = testsupport::random_couplings();
    const PolarCouplings p = couplings_to_polar(c);
    const ExchangeCouplings back = polar_to_couplings(p);
    EXPECT_NEAR(back.j1, c.j1, 1e-12);
    EXPECT_NEAR(back.j2, c.j2, 1e-12);
    EXPECT_NEAR(back.d1, c.d1, 1e-12);
    EXPECT_NEAR(back.d2, c.d2, 1e-12);
    EXPECT_LE(std::abs(p.alpha1() - c.alpha1()), 1e-12);
    EXPECT_LE(std::abs(p.alpha2() - c.alpha2()), 1e-12);
    EXPECT_GE(p.theta, 0.0);
    EXPECT_LE(p.theta, kPi / 2);
  }
}

TEST(Hamiltonian, MatchesTermByTermOracle) {
  for (int trial = 0; trial < 200; ++trial) {
    const ExchangeCouplings c = testsupport::random_couplings();
    const HamiltonianSet h = build_hamiltonians(c);
    EXPECT_LE(max_diff(h.h_eff, testsupport::hamiltonian_oracle(c)), 1e-14);
    const ExchangeCouplings xy{c.j1, c.j2, 0.0, 0.0};
    EXPECT_LE(max_diff(h.h_xy, testsupport::hamiltonian_oracle(xy)), 1e-14);
    EXPECT_LE(max_diff(build_xy_hamiltonian(c.j1, c.j2), h.h_xy), 1e-15);
    const auto [arm1, arm2] = build_arm_hamiltonians(c);
    EXPECT_LE(max_diff(arm1 + arm2, h.h_eff), 1e-15);
  }
}

TEST(Hamiltonian, HermitianAndBlockOffDiagonal) {
  const CMatrix parity = ancilla_parity();
  const CMatrix p0 = ancilla_zero_projector();
  for (int trial = 0; trial < 1000; ++trial) {
    const HamiltonianSet h = build_hamiltonians(testsupport::random_couplings());
    EXPECT_LE(hermiticity_defect(h.h_eff), 1e-14);
    EXPECT_LE(max_diff(parity * h.h_eff * parity, -h.h_eff), 1e-14);
    EXPECT_LE((p0 * h.h_eff * p0).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE(max_diff(h.h_eff.block(0, 4, 4, 4), h.w), 0.0);
    EXPECT_LE(max_diff(h.h_eff.block(4, 0, 4, 4), h.w.adjoint()), 1e-15);
  }
}

TEST(Hamiltonian, ExchangeMatrixEntries) {
  const ExchangeCouplings c{0.3, -1.1, 0.7, 0.2};
  const CMatrix w = exchange_matrix(c);
  const Complex a1 = c.alpha1(), a2 = c.alpha2();
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(1, 0) = a2;
  expected(2, 0) = std::conj(a1);
  expected(3, 1) = std::conj(a1);
  expected(3, 2) = a2;
  EXPECT_LE(max_diff(w, expected), 1e-15);
}

TEST(ClosedFormSvd, FactorsReproduceExchangeMatrix) {
  for (int trial = 0; trial < 1000; ++trial) {
    const ExchangeCouplings c = testsupport::random_couplings();
    const HamiltonianSet h = build_hamiltonians(c);
    const double omega = h.polar.omega;
    EXPECT_EQ(h.t_diag[0], 0.0);
    EXPECT_EQ(h.t_diag[1], 0.0);
    EXPECT_NEAR(h.t_diag[2], omega, 1e-15);
    EXPECT_NEAR(h.t_diag[3], omega, 1e-15);
    CMatrix t = CMatrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) t(k, k) = h.t_diag[static_cast<std::size_t>(k)];
    EXPECT_LE(max_diff(h.v0 * t * h.v1.adjoint(), h.w), 1e-12);
    EXPECT_LE(unitarity_defect(h.v0), 1e-12);
    EXPECT_LE(unitarity_defect(h.v1), 1e-12);

    // Numeric route: singular values (omega, omega, 0, 0).
    const SvdResult f = svd(h.w);
    EXPECT_NEAR(f.singular_values[0], omega, 1e-12);
    EXPECT_NEAR(f.singular_values[1], omega, 1e-12);
    EXPECT_NEAR(f.singular_values[2], 0.0, 1e-12);
    EXPECT_NEAR(f.singular_values[3], 0.0, 1e-12);
  }
}

TEST(Hamiltonian, ZeroCouplingsGiveZeroOperators) {
  const HamiltonianSet h = build_hamiltonians({0, 0, 0, 0});
  EXPECT_EQ(h.h_eff.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(h.polar.omega, 0.0);
}
