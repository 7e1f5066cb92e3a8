#include "ptomo/states.hpp"

#include <string>

namespace ptomo {

PureState::PureState(ComplexVector vec) : vec_(std::move(vec)) {
  require_finite(vec_, "PureState");
  double norm = vec_.norm();
  if (std::abs(norm - 1.0) > 1e-12)
    throw domain_error("PureState: vector not normalized (|norm-1| = " +
                       std::to_string(std::abs(norm - 1.0)) + ")");
}

PureState PureState::normalized(ComplexVector vec) {
  require_finite(vec, "PureState::normalized");
  double norm = vec.norm();
  if (norm < 1e-14) throw domain_error("PureState::normalized: zero vector");
  return PureState(vec / norm);
}

Projector Projector::from_frame(ComplexMatrix frame) {
  require_finite(frame, "Projector");
  const int r = static_cast<int>(frame.cols());
  if (r > frame.rows()) throw domain_error("Projector: rank exceeds dimension");
  if (r > 0) {
    ComplexMatrix gram = frame.adjoint() * frame;
    if (!approx_equal(gram, ComplexMatrix::Identity(r, r)))
      throw domain_error("Projector: frame is not column-orthonormal");
  }
  return Projector(std::move(frame));
}

Projector Projector::onto_span(const ComplexMatrix& columns) {
  const int d = static_cast<int>(columns.rows());
  if (columns.cols() == 0) return zero(d);
  Eigen::JacobiSVD<ComplexMatrix> svd(columns, Eigen::ComputeThinU);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > kRankCutoff) ++rank;
  return Projector(svd.matrixU().leftCols(rank));
}

Projector Projector::identity(int d) {
  if (d < 1) throw domain_error("Projector::identity: d must be positive");
  return Projector(ComplexMatrix::Identity(d, d));
}

Projector Projector::zero(int d) {
  if (d < 1) throw domain_error("Projector::zero: d must be positive");
  return Projector(ComplexMatrix(d, 0));
}

Projector Projector::standard(int d, int r) {
  if (r < 0 || r > d) throw domain_error("Projector::standard: need 0 <= r <= d");
  return Projector(ComplexMatrix::Identity(d, d).leftCols(r));
}

Projector Projector::complement() const {
  const int d = dim(), r = rank();
  if (r == 0) return identity(d);
  if (r == d) return Projector(ComplexMatrix(d, 0));
  // Full Householder QR: the trailing d-r columns of Q span the complement.
  Eigen::HouseholderQR<ComplexMatrix> qr(frame_);
  ComplexMatrix q = qr.householderQ();
  return Projector(q.rightCols(d - r));
}

ComplexMatrix Projector::canonical_frame() const {
  const int r = rank();
  if (r == 0) return frame_;
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(matrix());
  ComplexMatrix q = qr.householderQ();
  return q.leftCols(r);
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  require_finite(mat_, "DensityMatrix");
  if (mat_.rows() != mat_.cols()) throw domain_error("DensityMatrix: not square");
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kConstructionTol)
    throw domain_error("DensityMatrix: not Hermitian");
  if (std::abs(mat_.trace().real() - 1.0) > kConstructionTol ||
      std::abs(mat_.trace().imag()) > kConstructionTol)
    throw domain_error("DensityMatrix: trace != 1");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(mat_),
                                                      Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-9)
    throw domain_error("DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  return DensityMatrix(psi.dyad());
}

DensityMatrix DensityMatrix::projector_state(const Projector& p) {
  if (p.rank() == 0) throw domain_error("projector_state: rank-0 projector");
  return DensityMatrix(p.matrix() / static_cast<double>(p.rank()));
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  if (d < 1) throw domain_error("maximally_mixed: d must be positive");
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::random(int d, SeededRng& rng) {
  if (d < 1) throw domain_error("DensityMatrix::random: d must be positive");
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix w = g * g.adjoint();
  return DensityMatrix(w / w.trace().real());
}

}  // namespace ptomo
