// jordan.hpp
// Constructive Jordan's-lemma machinery for pairs of projectors:
// block decomposition via principal angles, block-wise metric formulas,
// well-aligned subspaces, robust-covering checks, and the basis lift
// used by the bootstrapped algorithm.

#pragma once

#include <vector>

#include "ptomo/states.hpp"

namespace ptomo {

struct JordanBlock {
  PureState u;   // Jordan vector of the first projector
  PureState v;   // Jordan vector of the second projector
  double omega;  // |<u|v>|, in [0,1]
};

struct JordanDecomposition {
  std::vector<JordanBlock> blocks;  // sorted by descending omega
  int dim = 0;
  int rank = 0;
};

// Equal-rank Jordan decomposition of (P, Q) via SVD of the r x r
// cross-Gram matrix frame(P)^dag frame(Q): singular values are the
// overlaps, rotated frames are the Jordan vectors. The merging
// convention yields exactly r blocks.
JordanDecomposition jordan_decompose(const Projector& p, const Projector& q);

struct BlockwiseMetrics {
  double trace_distance = 0.0;  // (sum sqrt(1 - w^2)) / r
  double fidelity = 0.0;        // (sum w) / r
  double affinity = 0.0;        // (sum w^2) / r
};

BlockwiseMetrics blockwise_metrics(const JordanDecomposition& dec);

// Projector onto span{ u_i : omega_i^2 >= threshold }, where u_i are the
// Jordan vectors of p1 against p2. Rank may be 0.
Projector align_projector(const Projector& p1, const Projector& p2,
                          double threshold);

// Principal angles for a possibly unequal-rank pair; used by the
// robust-cover and lift constructions.
struct PrincipalAngles {
  std::vector<double> sigma;  // min(r1, r2) cosines, descending
  ComplexMatrix left;         // d x r1 rotated frame of p1
  ComplexMatrix right;        // d x r2 rotated frame of p2
};

PrincipalAngles principal_angles(const Projector& p1, const Projector& p2);

// True iff rank(pi1 + pi2) = rank(pi) and every 2x2 Jordan block of
// (pi1, pi2) inside supp(pi) has squared overlap <= 0.1. Overlaps within
// 1e-8 of 0 or 1 classify as 1x1 blocks.
bool robust_cover_check(const Projector& pi1, const Projector& pi2,
                        const Projector& pi);

struct LiftedBasis {
  std::vector<PureState> basis;   // orthonormal basis of supp(P)
  std::vector<PureState> lifted;  // matched lifts inside supp(A1 + A2)
  std::vector<double> overlaps;   // |<basis_k | lifted_k>|^2
  double min_overlap = 1.0;
};

// Step-3 construction: classify the Jordan blocks of (B1, B2) inside
// supp(P), build the orthonormal basis O_P, and lift it through the
// matched aligned pairs (B_i, A_i) into supp(A1 + A2).
LiftedBasis lift_basis(const Projector& p, const Projector& a1,
                       const Projector& b1, const Projector& a2,
                       const Projector& b2);

}  // namespace ptomo
