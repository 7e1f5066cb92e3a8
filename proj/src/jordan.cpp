#include "ptomo/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace ptomo {

namespace {

constexpr double kBlockClassifyTol = 1e-8;

void require_compatible(const Projector& p, const Projector& q, const char* what,
                        bool equal_rank) {
  if (p.dim() != q.dim())
    throw domain_error(std::string(what) + ": dimension mismatch");
  if (equal_rank && p.rank() != q.rank())
    throw domain_error(std::string(what) +
                       ": rank mismatch (the merging convention needs equal ranks)");
}

bool is_subprojector(const Projector& sub, const Projector& whole, double tol) {
  if (sub.rank() == 0) return true;
  ComplexMatrix residual =
      sub.frame() - whole.matrix() * sub.frame();  // (I - Pi) columns
  return residual.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

PrincipalAngles principal_angles(const Projector& p1, const Projector& p2) {
  require_compatible(p1, p2, "principal_angles", false);
  PrincipalAngles out;
  const int r1 = p1.rank(), r2 = p2.rank();
  if (r1 == 0 || r2 == 0) {
    out.left = p1.frame();
    out.right = p2.frame();
    return out;
  }
  ComplexMatrix gram = p1.frame().adjoint() * p2.frame();
  Eigen::JacobiSVD<ComplexMatrix> svd(gram, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.left = p1.frame() * svd.matrixU();
  out.right = p2.frame() * svd.matrixV();
  const int m = std::min(r1, r2);
  out.sigma.resize(m);
  for (int i = 0; i < m; ++i) {
    double s = std::clamp(svd.singularValues()(i), 0.0, 1.0);
    // Snap machine noise at the endpoints: sqrt(1 - s^2) amplifies an
    // O(1e-16) error at s = 1 into O(1e-8) metric errors otherwise.
    if (1.0 - s < 1e-11) s = 1.0;
    if (s < 1e-11) s = 0.0;
    out.sigma[i] = s;
  }
  return out;
}

JordanDecomposition jordan_decompose(const Projector& p, const Projector& q) {
  require_compatible(p, q, "jordan_decompose", true);
  PrincipalAngles angles = principal_angles(p, q);
  JordanDecomposition dec;
  dec.dim = p.dim();
  dec.rank = p.rank();
  dec.blocks.reserve(p.rank());
  for (int i = 0; i < p.rank(); ++i) {
    dec.blocks.push_back({PureState::normalized(angles.left.col(i)),
                          PureState::normalized(angles.right.col(i)),
                          angles.sigma[i]});
  }
  return dec;  // SVD order is already descending in omega
}

BlockwiseMetrics blockwise_metrics(const JordanDecomposition& dec) {
  BlockwiseMetrics m;
  if (dec.rank == 0) return m;
  for (const JordanBlock& b : dec.blocks) {
    m.trace_distance += std::sqrt(std::max(0.0, 1.0 - b.omega * b.omega));
    m.fidelity += b.omega;
    m.affinity += b.omega * b.omega;
  }
  m.trace_distance /= dec.rank;
  m.fidelity /= dec.rank;
  m.affinity /= dec.rank;
  return m;
}

Projector align_projector(const Projector& p1, const Projector& p2,
                          double threshold) {
  JordanDecomposition dec = jordan_decompose(p1, p2);
  ComplexMatrix frame(p1.dim(), p1.rank());
  int kept = 0;
  for (const JordanBlock& b : dec.blocks) {
    if (b.omega * b.omega >= threshold) frame.col(kept++) = b.u.vec();
  }
  if (kept == 0) return Projector::zero(p1.dim());
  return Projector::from_frame(frame.leftCols(kept));
}

bool robust_cover_check(const Projector& pi1, const Projector& pi2,
                        const Projector& pi) {
  require_compatible(pi1, pi, "robust_cover_check", false);
  require_compatible(pi2, pi, "robust_cover_check", false);
  if (!is_subprojector(pi1, pi, kBlockClassifyTol) ||
      !is_subprojector(pi2, pi, kBlockClassifyTol))
    throw domain_error("robust_cover_check: arguments are not subprojectors of Pi");

  if (psd_rank(pi1.matrix() + pi2.matrix()) != pi.rank()) return false;

  PrincipalAngles angles = principal_angles(pi1, pi2);
  for (double s : angles.sigma) {
    bool two_by_two = s > kBlockClassifyTol && s < 1.0 - kBlockClassifyTol;
    if (two_by_two && s * s > 0.1) return false;
  }
  return true;
}

namespace {

// Matched aligned pair (B, A): Jordan vectors u_j of B, their partners
// utilde_j in A, and the overlaps. P maps utilde_j to omega_j u_j.
struct AlignedPairs {
  ComplexMatrix u;       // d x m
  ComplexMatrix lifted;  // d x m
  std::vector<double> omega;
};

AlignedPairs matched_pairs(const Projector& b, const Projector& a) {
  if (b.rank() != a.rank())
    throw domain_error("lift_basis: aligned pair (A_i, B_i) has mismatched ranks");
  AlignedPairs out;
  if (b.rank() == 0) {
    out.u = b.frame();
    out.lifted = a.frame();
    return out;
  }
  PrincipalAngles angles = principal_angles(b, a);
  out.u = angles.left;
  out.lifted = angles.right;
  out.omega = angles.sigma;
  for (double w : out.omega) {
    if (w < 1e-3)
      throw domain_error("lift_basis: aligned pair overlap too small to lift");
  }
  return out;
}

// Lift x in supp(B) to the normalized preimage under P inside supp(A):
// expand x over the Jordan vectors u_j and reweight by 1/omega_j.
ComplexVector lift_vector(const AlignedPairs& pairs, const ComplexVector& x) {
  ComplexVector coeff = pairs.u.adjoint() * x;
  ComplexVector raw = ComplexVector::Zero(x.size());
  for (Eigen::Index j = 0; j < coeff.size(); ++j)
    raw += coeff(j) / pairs.omega[j] * pairs.lifted.col(j);
  return raw / raw.norm();
}

}  // namespace

LiftedBasis lift_basis(const Projector& p, const Projector& a1,
                       const Projector& b1, const Projector& a2,
                       const Projector& b2) {
  if (!robust_cover_check(b1, b2, p))
    throw domain_error("lift_basis: B1 and B2 do not robustly cover P");
  AlignedPairs pairs1 = matched_pairs(b1, a1);
  AlignedPairs pairs2 = matched_pairs(b2, a2);

  // Classify the Jordan blocks of (B1, B2) inside supp(P). Every matched
  // direction with sigma near 1 is a 1x1 block fixed by B1 (and B2); sigma
  // near 0 splits into a B1-only and a B2-only direction; anything in
  // between is a genuine 2x2 block. Unmatched frame directions beyond
  // min(r1, r2) are 1x1 blocks of their own side.
  PrincipalAngles angles = principal_angles(b1, b2);
  const int r1 = b1.rank(), r2 = b2.rank();
  const int matched = static_cast<int>(angles.sigma.size());

  LiftedBasis out;
  auto push = [&](const ComplexVector& psi, const ComplexVector& lifted) {
    out.basis.emplace_back(PureState::normalized(psi));
    out.lifted.emplace_back(PureState::normalized(lifted));
    std::complex<double> ov = out.basis.back().vec().dot(out.lifted.back().vec());
    out.overlaps.push_back(std::norm(ov));
  };

  for (int k = 0; k < matched; ++k) {
    double s = angles.sigma[k];
    ComplexVector w1 = angles.left.col(k);
    ComplexVector w2 = angles.right.col(k);
    if (s >= 1.0 - kBlockClassifyTol) {
      push(w1, lift_vector(pairs1, w1));
    } else if (s <= kBlockClassifyTol) {
      push(w1, lift_vector(pairs1, w1));
      push(w2, lift_vector(pairs2, w2));
    } else {
      // 2x2 block: basis {w1, w1perp}, lift each constituent separately.
      ComplexVector lift1 = lift_vector(pairs1, w1);
      ComplexVector lift2 = lift_vector(pairs2, w2);
      std::complex<double> overlap = w1.dot(w2);  // <w1|w2>
      ComplexVector perp = w2 - overlap * w1;
      ComplexVector perp_lift = lift2 - overlap * lift1;
      push(w1, lift1);
      push(perp, perp_lift);
    }
  }
  for (int k = matched; k < r1; ++k) {
    ComplexVector w1 = angles.left.col(k);
    push(w1, lift_vector(pairs1, w1));
  }
  for (int k = matched; k < r2; ++k) {
    ComplexVector w2 = angles.right.col(k);
    push(w2, lift_vector(pairs2, w2));
  }

  if (static_cast<int>(out.basis.size()) != p.rank())
    throw std::logic_error("lift_basis: block classification lost a direction");
  out.min_overlap = 1.0;
  for (double ov : out.overlaps) out.min_overlap = std::min(out.min_overlap, ov);
  return out;
}

}  // namespace ptomo
