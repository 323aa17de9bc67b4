#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace spinholo {

using Complex = std::complex<double>;

// Dense complex matrix used for every operator in the library. Dimensions in
// practice are 2, 4, 8 and 8 * 2^(3N) for the hyperfine bath.
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kAlgebraicTol = 1e-12;

CMatrix identity(Eigen::Index n);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix adjoint(const CMatrix& m);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// max_ij |m - m^dagger|_ij
double hermiticity_defect(const CMatrix& m);

/// max_ij |m^dagger m - I|_ij
double unitarity_defect(const CMatrix& m);

/// exp(-i * scale * h) for Hermitian h, computed through the eigendecomposition
/// of h. Throws NonHermitianInput when hermiticity_defect(h) > 1e-12.
CMatrix expm_hermitian(const CMatrix& h, double scale);

struct SvdResult {
  CMatrix u;
  std::vector<double> singular_values;  // non-negative, descending
  CMatrix v;
};

/// Full singular value decomposition m = u * diag(s) * v^dagger with unitary
/// u and v.
SvdResult svd(const CMatrix& m);

/// u * diag(s) * v^dagger, padding with zeros for rectangular inputs.
CMatrix reconstruct(const SvdResult& f);

}  // namespace spinholo
