#include "ptomo/matrix.hpp"

namespace ptomo {

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  require_finite(m, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  HermitianEig eig = hermitian_eig(m);
  RealVector roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double v = eig.values(i);
    roots(i) = v > kEigenvalueClipTol ? std::sqrt(v) : 0.0;
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

int psd_rank(const ComplexMatrix& m, double cutoff) {
  HermitianEig eig = hermitian_eig(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) > cutoff) ++rank;
  return rank;
}

}  // namespace ptomo
