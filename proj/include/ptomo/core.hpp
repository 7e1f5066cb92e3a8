// core.hpp
// Core quantum operations: Haar sampling, the four distance measures,
// projector rounding, subspace restriction, binary projective
// measurement, and symmetric-subspace utilities.

#pragma once

#include <cstdint>

#include "ptomo/rational.hpp"
#include "ptomo/rng.hpp"
#include "ptomo/states.hpp"

namespace ptomo {

// Haar random d x d unitary via QR of a complex Gaussian matrix with the
// R-diagonal phases normalized to positive reals (exact Haar measure).
ComplexMatrix haar_unitary(int d, SeededRng& rng);

// Haar random rank-r projector: first r columns of a Haar unitary.
Projector haar_projector(int d, int r, SeededRng& rng);

PureState haar_pure_state(int d, SeededRng& rng);

// Haar random pure state inside the support of a projector.
PureState haar_pure_state_in(const Projector& support, SeededRng& rng);

// D_tr(rho, sigma) = ||rho - sigma||_1 / 2.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// F(rho, sigma) = tr sqrt(sqrt(rho) sigma sqrt(rho)), square-root convention.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// D_B = sqrt(2 (1 - F)).
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// A(rho, sigma) = tr(sqrt(rho) sqrt(sigma)).
double affinity(const DensityMatrix& rho, const DensityMatrix& sigma);

inline double bures_from_fidelity(double fid) {
  double x = 2.0 * (1.0 - fid);
  return x > 0 ? std::sqrt(x) : 0.0;
}

// Projector onto the top-r eigenvectors of rho_hat. Ties are broken
// deterministically: descending eigenvalue, then lexicographic order of
// the phase-fixed, rounded eigenvector entries.
Projector round_to_projector_state(const DensityMatrix& rho_hat, int r);

struct Restriction {
  DensityMatrix state;  // R rho R / tr(R rho), ambient dimension
  double weight;        // tr(R rho)
};

Restriction restrict_to_subspace(const DensityMatrix& rho, const Projector& r_proj);

enum class MeasureOutcome { kIn, kOut };

struct BinaryMeasurement {
  MeasureOutcome outcome;
  DensityMatrix post;
};

// Projective {R, I-R} measurement with the normalized post-state.
BinaryMeasurement measure_binary(const DensityMatrix& rho, const Projector& r_proj,
                                 SeededRng& rng);

// dim Sym^n(C^d) = C(n + d - 1, n), exact.
BigInt sym_dimension(int n, int d);

// Projector onto Sym^n(C^d) as a dense d^n x d^n matrix,
// (1/n!) sum_pi P(pi). Throws capacity_error when d^n exceeds the limit.
ComplexMatrix sym_projector(int n, int d, std::int64_t size_limit = 4096);

}  // namespace ptomo
