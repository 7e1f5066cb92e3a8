// matrix.hpp
// Dense complex matrices (Eigen-backed) and the numerical conventions
// used throughout: construction invariants at 1e-10, eigenvalue clipping
// at 1e-12, a single Hermitian eigendecomposition primitive.

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ptomo/errors.hpp"

namespace ptomo {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kConstructionTol = 1e-10;
inline constexpr double kEigenvalueClipTol = 1e-12;
inline constexpr double kRankCutoff = 1e-8;

// Entry-wise comparison with an absolute tolerance.
inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol = kConstructionTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw domain_error(std::string(what) + ": non-finite entries");
}

inline ComplexMatrix hermitize(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

struct HermitianEig {
  RealVector values;      // ascending, Eigen convention
  ComplexMatrix vectors;  // columns
};

// The single eigendecomposition primitive: symmetrizes its input first.
HermitianEig hermitian_eig(const ComplexMatrix& m);

// Square root of a (nearly) PSD Hermitian matrix; eigenvalues below the
// clip tolerance are treated as zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Rank of a Hermitian PSD matrix, counting eigenvalues above the cutoff.
int psd_rank(const ComplexMatrix& m, double cutoff = kRankCutoff);

}  // namespace ptomo
