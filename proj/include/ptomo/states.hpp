// states.hpp
// Value types for quantum states: pure states, density matrices, and
// rank-r projectors stored as orthonormal frames. All are immutable
// after construction and validate their invariants on entry.

#pragma once

#include <utility>

#include "ptomo/matrix.hpp"
#include "ptomo/rng.hpp"

namespace ptomo {

class PureState {
 public:
  // Requires a unit vector (tolerance 1e-12).
  explicit PureState(ComplexVector vec);

  // Normalizes first; rejects (numerically) zero vectors.
  static PureState normalized(ComplexVector vec);

  const ComplexVector& vec() const { return vec_; }
  int dim() const { return static_cast<int>(vec_.size()); }

  ComplexMatrix dyad() const { return vec_ * vec_.adjoint(); }

 private:
  ComplexVector vec_;
};

class Projector {
 public:
  // `frame` must be a d x r column-orthonormal isometry (r may be 0).
  static Projector from_frame(ComplexMatrix frame);

  // Orthonormalizes the column span of `columns` (SVD, singular values
  // above the rank cutoff) and projects onto it.
  static Projector onto_span(const ComplexMatrix& columns);

  static Projector identity(int d);
  static Projector zero(int d);
  static Projector standard(int d, int r);  // first r coordinate axes

  const ComplexMatrix& frame() const { return frame_; }
  int dim() const { return static_cast<int>(frame_.rows()); }
  int rank() const { return static_cast<int>(frame_.cols()); }

  // Dense d x d matrix, derived from the frame on demand.
  ComplexMatrix matrix() const { return frame_ * frame_.adjoint(); }

  // Projector onto the orthogonal complement.
  Projector complement() const;

  // Deterministic frame depending only on the projected subspace, not on
  // the stored frame's gauge (column-pivoted QR of the dense matrix).
  ComplexMatrix canonical_frame() const;

 private:
  explicit Projector(ComplexMatrix frame) : frame_(std::move(frame)) {}
  ComplexMatrix frame_;
};

class DensityMatrix {
 public:
  // Requires Hermitian (1e-10), PSD (min eigenvalue >= -1e-9), unit trace.
  explicit DensityMatrix(ComplexMatrix mat);

  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix projector_state(const Projector& p);  // P / rank
  static DensityMatrix maximally_mixed(int d);

  // Random density matrix (Hilbert-Schmidt ensemble: GG^dag normalized).
  static DensityMatrix random(int d, SeededRng& rng);

  const ComplexMatrix& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  ComplexMatrix mat_;
};

}  // namespace ptomo
