#include "ptomo/pgm.hpp"

#include <cmath>

#include "ptomo/core.hpp"
#include "ptomo/rep_theory.hpp"
#include "ptomo/schur_weyl.hpp"
#include "ptomo/wss.hpp"

namespace ptomo {

int discard_count(double epsilon, int r) {
  return static_cast<int>(std::ceil(epsilon * r - 1e-9));
}

double LearnerSpec::trace_budget(int r) const {
  switch (kind) {
    case LearnerKind::kExactOracle:
      return 0.0;
    case LearnerKind::kAdversarialDiscard:
      return static_cast<double>(discard_count(epsilon, r)) / r;
    case LearnerKind::kUniformTilt:
    case LearnerKind::kHayashiPure:
      return epsilon;
  }
  throw domain_error("LearnerSpec: unknown kind");
}

PureState hayashi_sample(const PureState& u, int n, SeededRng& rng) {
  const int d = u.dim();
  if (d < 2) throw domain_error("hayashi_sample: requires d >= 2");
  if (n < 1) throw domain_error("hayashi_sample: requires n >= 1");

  // t ~ Beta(n+1, d-1), the overlap law of the pure-state PGM output.
  double x = rng.gamma(n + 1.0);
  double y = rng.gamma(d - 1.0);
  double t = x / (x + y);

  ComplexVector w;
  double norm = 0.0;
  do {
    ComplexVector z(d);
    for (int i = 0; i < d; ++i) z(i) = rng.complex_normal();
    w = z - u.vec() * u.vec().dot(z);
    norm = w.norm();
  } while (norm < 1e-12);
  w /= norm;

  double phase = 6.283185307179586 * rng.uniform();
  ComplexVector out = std::polar(std::sqrt(t), phase) * u.vec() +
                      std::sqrt(std::max(0.0, 1.0 - t)) * w;
  return PureState::normalized(std::move(out));
}

Rational pgm_expected_affinity(int n, int d, int r) {
  if (n < 1) throw domain_error("pgm_expected_affinity: requires n >= 1");
  if (r < 1 || r > d) throw domain_error("pgm_expected_affinity: need 1 <= r <= d");
  if (n > kPgmAffinityCapacity)
    throw capacity_error("pgm_expected_affinity: n exceeds capacity");

  Rational total = 0;
  for (const Partition& lambda : partitions_of(n, std::min(d, r))) {
    BigInt s_r = num_ssyt(lambda, r);
    if (s_r == 0) continue;
    BigInt s_d = num_ssyt(lambda, d);
    Rational inner = 0;
    for (const Partition& child : pieri_expand(lambda, d)) {
      BigInt child_r = num_ssyt(child, r);
      if (child_r == 0) continue;
      inner += Rational(child_r * child_r, num_ssyt(child, d));
    }
    total += Rational(s_d * num_syt(lambda), s_r) * inner;
  }
  return total / Rational(int_pow(r, n + 1));
}

AffinityBoundCheck pgm_affinity_bound_check(int n, int d, int r) {
  AffinityBoundCheck out;
  out.value = pgm_expected_affinity(n, d, r);
  out.bound = 1 - Rational(3L * r * d, 2L * n);
  out.pass = out.value >= out.bound && out.value <= 1;
  return out;
}

namespace {

// tr(nu_lambda(U Q U^dag) nu_lambda(P)) up to the fixed factor dim(lambda):
// evaluated as tr(Pi_lambda (U Q U^dag)^{x n} M) with M = P^{x n}
// premultiplied into the projector.
double posterior_density(const ComplexMatrix& projected_target,
                         const ComplexMatrix& candidate, int n) {
  ComplexMatrix powered = tensor_power(candidate, n);
  return (powered * projected_target).trace().real();
}

ComplexMatrix gue_step(int d, double scale, SeededRng& rng) {
  ComplexMatrix h(d, d);
  for (int i = 0; i < d; ++i) {
    h(i, i) = scale * rng.normal();
    for (int j = i + 1; j < d; ++j) {
      std::complex<double> z = scale * rng.complex_normal();
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  // exp(iH) through the Hermitian eigendecomposition.
  HermitianEig eig = hermitian_eig(h);
  ComplexVector phases(d);
  for (int i = 0; i < d; ++i)
    phases(i) = std::polar(1.0, eig.values(i));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

Projector pgm_dense_simulate(const Projector& p, int n, SeededRng& rng,
                             std::int64_t dense_limit) {
  const int d = p.dim(), r = p.rank();
  if (n < 1) throw domain_error("pgm_dense_simulate: requires n >= 1");
  if (r < 1) throw domain_error("pgm_dense_simulate: requires rank >= 1");
  dense_dimension(n, d, dense_limit);
  if (r == d) return Projector::identity(d);

  WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, d));
  Partition lambda = wss_sample(dist, rng);

  ComplexMatrix target = isotypic_projector(lambda, n, d, dense_limit) *
                         tensor_power(p.matrix(), n);

  constexpr int kBurnIn = 200;
  constexpr double kProposalScale = 0.3;
  ComplexMatrix q = Projector::standard(d, r).matrix();
  ComplexMatrix u = haar_unitary(d, rng);
  double density = posterior_density(target, u * q * u.adjoint(), n);
  for (int step = 0; step < kBurnIn; ++step) {
    ComplexMatrix proposal = gue_step(d, kProposalScale, rng) * u;
    double candidate = posterior_density(target, proposal * q * proposal.adjoint(), n);
    double accept = rng.uniform();
    if (density <= 0.0 || accept * density < candidate) {
      u = std::move(proposal);
      density = candidate;
    }
  }
  return Projector::from_frame(u.leftCols(r));
}

namespace {

void check_mock_epsilon(const LearnerSpec& spec) {
  if (spec.epsilon <= 0.0 || spec.epsilon > 1.0)
    throw domain_error("mock_learner_run: epsilon must lie in (0, 1]");
}

}  // namespace

Projector mock_learner_run(const LearnerSpec& spec, const Projector& p,
                           SeededRng& rng) {
  const int d = p.dim(), r = p.rank();
  switch (spec.kind) {
    case LearnerKind::kExactOracle:
      return p;

    case LearnerKind::kAdversarialDiscard: {
      check_mock_epsilon(spec);
      int m = discard_count(spec.epsilon, r);
      if (m > r) throw domain_error("adversarial_discard: ceil(eps r) > r");
      if (d - r < m)
        throw domain_error("adversarial_discard: complement too small");
      // The discarded subspace is a deterministic function of supp(P)
      // (canonical frames), so repeated runs on the same input discard
      // the same directions.
      ComplexMatrix kept = p.canonical_frame();
      ComplexMatrix fresh = p.complement().canonical_frame();
      ComplexMatrix frame(d, r);
      frame.leftCols(r - m) = kept.rightCols(r - m);
      frame.rightCols(m) = fresh.leftCols(m);
      return Projector::from_frame(std::move(frame));
    }

    case LearnerKind::kUniformTilt: {
      check_mock_epsilon(spec);
      if (d < 2 * r)
        throw domain_error("uniform_tilt: complement too small (needs d >= 2r)");
      double theta = std::asin(spec.epsilon);
      ComplexMatrix base = p.canonical_frame();
      ComplexMatrix fresh = p.complement().canonical_frame();
      ComplexMatrix frame(d, r);
      for (int i = 0; i < r; ++i)
        frame.col(i) = std::cos(theta) * base.col(i) + std::sin(theta) * fresh.col(i);
      return Projector::from_frame(std::move(frame));
    }

    case LearnerKind::kHayashiPure: {
      check_mock_epsilon(spec);
      if (r != 1) throw domain_error("hayashi_pure: requires rank 1");
      if (spec.params.empty() || spec.params[0] < 1)
        throw domain_error("hayashi_pure: params[0] must give the copy count");
      int copies = static_cast<int>(spec.params[0]);
      PureState u(p.canonical_frame().col(0));
      PureState estimate = hayashi_sample(u, copies, rng);
      ComplexMatrix frame(d, 1);
      frame.col(0) = estimate.vec();
      return Projector::from_frame(std::move(frame));
    }
  }
  throw domain_error("mock_learner_run: unknown learner kind");
}

}  // namespace ptomo
