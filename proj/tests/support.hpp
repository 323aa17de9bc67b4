#pragma once

// Random generators and brute-force oracles shared by the test binaries.
// Nothing here calls into the library's numerics beyond basic types, so the
// oracles stay independent of the code they check.

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "spinholo/numerics.hpp"
#include "spinholo/spin_system.hpp"

namespace testsupport {

using spinholo::CMatrix;
using spinholo::Complex;

inline constexpr double kPi = std::numbers::pi;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline CMatrix random_matrix(Eigen::Index n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng()), g(rng()));
  return m;
}

inline CMatrix random_hermitian(Eigen::Index n, double scale = 1.0) {
  const CMatrix a = random_matrix(n, scale);
  return 0.5 * (a + a.adjoint());
}

// Haar-distributed unitary via QR with the phase fix on R's diagonal.
inline CMatrix random_unitary(Eigen::Index n) {
  const CMatrix z = random_matrix(n);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

inline spinholo::ExchangeCouplings random_couplings(bool with_dm = true) {
  spinholo::ExchangeCouplings c;
  c.j1 = uniform(-2.0, 2.0);
  c.j2 = uniform(-2.0, 2.0);
  if (with_dm) {
    c.d1 = uniform(-2.0, 2.0);
    c.d2 = uniform(-2.0, 2.0);
  }
  return c;
}

inline CMatrix kron_oracle(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

// exp(-i s h) by scaling and squaring of a long Taylor series.
inline CMatrix expm_taylor(const CMatrix& h, double s) {
  const CMatrix a = Complex(0.0, -s) * h;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.25) ++squarings;
  const CMatrix b = a / std::ldexp(1.0, squarings);
  CMatrix term = CMatrix::Identity(h.rows(), h.cols());
  CMatrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

// Spin-1/2 operators built from Pauli matrices, independent of the library.
inline CMatrix pauli(char which) {
  CMatrix p(2, 2);
  switch (which) {
    case 'x': p << 0, 1, 1, 0; break;
    case 'y': p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'z': p << 1, 0, 0, -1; break;
    default: p = CMatrix::Identity(2, 2);
  }
  return p;
}

// S_axis at `site` of a three-spin chain (a, 1, 2), ancilla leftmost.
inline CMatrix spin3(int site, char axis) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int k = 0; k < 3; ++k) out = kron_oracle(out, k == site ? CMatrix(0.5 * pauli(axis)) : pauli('i'));
  return out;
}

// XY plus DM Hamiltonian written term by term from the spin operators.
inline CMatrix hamiltonian_oracle(const spinholo::ExchangeCouplings& c) {
  const int a = 0, s1 = 1, s2 = 2;
  return c.j1 * (spin3(s1, 'x') * spin3(a, 'x') + spin3(s1, 'y') * spin3(a, 'y')) +
         c.j2 * (spin3(a, 'x') * spin3(s2, 'x') + spin3(a, 'y') * spin3(s2, 'y')) +
         c.d1 * (spin3(s1, 'x') * spin3(a, 'y') - spin3(s1, 'y') * spin3(a, 'x')) +
         c.d2 * (spin3(a, 'x') * spin3(s2, 'y') - spin3(a, 'y') * spin3(s2, 'x'));
}

inline double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Standard gates in the |s1 s2> basis.
inline CMatrix cnot() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

inline CMatrix swap_gate() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

// CNOT(1->2) followed by CNOT(2->1).
inline CMatrix dcnot() {
  CMatrix reverse = CMatrix::Zero(4, 4);
  reverse(0, 0) = reverse(3, 1) = reverse(2, 2) = reverse(1, 3) = 1.0;
  return reverse * cnot();
}

// exp(i (c1 XX + c2 YY + c3 ZZ) / 2), the canonical gate at chamber point c.
inline CMatrix canonical_gate(double c1, double c2, double c3) {
  const CMatrix gen = c1 * kron_oracle(pauli('x'), pauli('x')) + c2 * kron_oracle(pauli('y'), pauli('y')) +
                      c3 * kron_oracle(pauli('z'), pauli('z'));
  return expm_taylor(gen, -0.5);
}

}  // namespace testsupport
