#include "spinholo/numerics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spinholo/errors.hpp"

namespace spinholo {

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix adjoint(const CMatrix& m) { return m.adjoint(); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs_diff(m, m.adjoint());
}

double unitarity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs_diff(m.adjoint() * m, identity(m.rows()));
}

CMatrix expm_hermitian(const CMatrix& h, double scale) {
  const double defect = hermiticity_defect(h);
  if (defect > kAlgebraicTol) {
    std::ostringstream msg;
    msg << "expm_hermitian: generator is not Hermitian (defect " << defect << ")";
    throw NonHermitianInput(msg.str());
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const CMatrix hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hs);
  const Eigen::VectorXd& w = eig.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases(k) = std::polar(1.0, -scale * w(k));
  }
  const CMatrix& v = eig.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

SvdResult svd(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = solver.singularValues();
  // Eigen already returns descending values; keep the ordering explicit.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(s.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return s(a) > s(b); });

  SvdResult out;
  out.u = solver.matrixU();
  out.v = solver.matrixV();
  out.singular_values.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto src = order[k];
    const auto dst = static_cast<Eigen::Index>(k);
    out.singular_values.push_back(s(src));
    out.u.col(dst) = solver.matrixU().col(src);
    out.v.col(dst) = solver.matrixV().col(src);
  }
  return out;
}

CMatrix reconstruct(const SvdResult& f) {
  CMatrix sigma = CMatrix::Zero(f.u.cols(), f.v.cols());
  for (std::size_t k = 0; k < f.singular_values.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    sigma(i, i) = f.singular_values[k];
  }
  return f.u * sigma * f.v.adjoint();
}

}  // namespace spinholo
