#include "ptomo/bootstrap.hpp"

#include <cmath>

#include "ptomo/jordan.hpp"

namespace ptomo {

long BootstrapConfig::derived_budget() const {
  if (copies_budget > 0) return copies_budget;
  double extra = budget_constant * r * r / (epsilon * epsilon);
  return 2L * learner_copies + static_cast<long>(std::ceil(extra));
}

void BootstrapConfig::validate() const {
  if (d < 1 || r < 1 || r > d) throw domain_error("BootstrapConfig: need 1 <= r <= d");
  if (!(epsilon > 0.0 && epsilon < alpha))
    throw domain_error("BootstrapConfig: need 0 < epsilon < alpha");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw domain_error("BootstrapConfig: need alpha in (0, 1)");
  if (learner_copies < 0) throw domain_error("BootstrapConfig: negative copies");
}

Projector bootstrap_learner_round(const Projector& p, const LearnerSpec& learner,
                                  SeededRng& rng) {
  ComplexMatrix u = haar_unitary(p.dim(), rng);
  Projector rotated = Projector::from_frame(u * p.frame());
  Projector estimate = mock_learner_run(learner, rotated, rng);
  return Projector::from_frame(u.adjoint() * estimate.frame());
}

Projector span_projector(const Projector& p1, const Projector& p2) {
  if (p1.dim() != p2.dim()) throw domain_error("span_projector: dimension mismatch");
  ComplexMatrix stacked(p1.dim(), p1.rank() + p2.rank());
  stacked.leftCols(p1.rank()) = p1.frame();
  stacked.rightCols(p2.rank()) = p2.frame();
  return Projector::onto_span(stacked);
}

namespace {

double projector_trace_distance(const Projector& p, const Projector& q) {
  return blockwise_metrics(jordan_decompose(p, q)).trace_distance;
}

// tr(R P) / r through the frames.
double overlap_fraction(const Projector& r_span, const Projector& p) {
  if (r_span.rank() == 0) return 0.0;
  return (r_span.frame().adjoint() * p.frame()).squaredNorm() / p.rank();
}

// Bures-delta perturbation of rho inside supp(R): tilt the heaviest
// eigenvectors by a common angle toward fresh directions of supp(R).
// With mass m tilted by theta the fidelity against rho is exactly
// 1 - (1 - cos theta) m, so theta is solved from delta.
DensityMatrix noisy_restriction(const DensityMatrix& rho, const Projector& r_span,
                                double delta) {
  if (!(delta > 0.0 && delta < std::sqrt(2.0)))
    throw domain_error("noisy oracle: delta must lie in (0, sqrt(2))");
  HermitianEig eig = hermitian_eig(rho.mat());
  const int d = rho.dim();
  std::vector<int> live;  // ascending eigenvalue order
  for (int i = 0; i < d; ++i)
    if (eig.values(i) > kEigenvalueClipTol) live.push_back(i);
  const int k = static_cast<int>(live.size());

  ComplexMatrix support(d, k);
  for (int i = 0; i < k; ++i) support.col(i) = eig.vectors.col(live[i]);
  ComplexMatrix residual =
      r_span.frame() - support * (support.adjoint() * r_span.frame());
  Projector fresh = Projector::onto_span(residual);
  const int tiltable = std::min(fresh.rank(), k);
  if (tiltable == 0)
    throw domain_error("noisy oracle: supp(R) has no room to tilt rho|_R");

  double mass = 0.0;  // tilt the largest eigenvalues first
  for (int i = 0; i < tiltable; ++i) mass += eig.values(live[k - 1 - i]);
  double cos_theta = 1.0 - delta * delta / (2.0 * mass);
  if (cos_theta < -1.0)
    throw domain_error("noisy oracle: delta unreachable within supp(R)");
  double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));

  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < k; ++i) {
    ComplexVector dir = support.col(i);
    int from_top = k - 1 - i;
    if (from_top < tiltable)
      dir = cos_theta * dir + sin_theta * fresh.frame().col(from_top);
    out += eig.values(live[i]) * dir * dir.adjoint();
  }
  return DensityMatrix(hermitize(out / out.trace().real()));
}

}  // namespace

BootstrapTrace run_bootstrap(const BootstrapConfig& cfg, const Projector& p,
                             SeededRng& rng) {
  cfg.validate();
  if (p.dim() != cfg.d || p.rank() != cfg.r)
    throw domain_error("run_bootstrap: projector does not match the config");
  const double threshold =
      1.0 - cfg.epsilon * cfg.epsilon / (cfg.alpha * cfg.alpha);
  DensityMatrix rho = DensityMatrix::projector_state(p);

  BootstrapTrace trace{
      Projector::zero(cfg.d), Projector::zero(cfg.d), Projector::zero(cfg.d),
      Projector::zero(cfg.d), Projector::zero(cfg.d), Projector::zero(cfg.d),
      Projector::zero(cfg.d)};

  // Steps 1-2: two independently rotated learner rounds.
  trace.p_hat_1 = bootstrap_learner_round(p, cfg.learner, rng);
  trace.p_hat_2 = bootstrap_learner_round(p, cfg.learner, rng);
  trace.learner_td_1 = projector_trace_distance(p, trace.p_hat_1);
  trace.learner_td_2 = projector_trace_distance(p, trace.p_hat_2);
  const double budget = cfg.learner.trace_budget(cfg.r) + 1e-6;
  if (trace.learner_td_1 > budget || trace.learner_td_2 > budget)
    throw protocol_violation_error("run_bootstrap: learner exceeded its budget");

  // Step 3: the span projector.
  trace.r_span = span_projector(trace.p_hat_1, trace.p_hat_2);
  trace.tr_r_rho = overlap_fraction(trace.r_span, p);

  // Alignment diagnostics for the proof's intermediate objects.
  trace.a1 = align_projector(trace.p_hat_1, p, threshold);
  trace.a2 = align_projector(trace.p_hat_2, p, threshold);
  trace.b1 = align_projector(p, trace.p_hat_1, threshold);
  trace.b2 = align_projector(p, trace.p_hat_2, threshold);
  trace.robust_cover = robust_cover_check(trace.b1, trace.b2, p);
  if (trace.robust_cover) {
    trace.lift_min_overlap =
        lift_basis(p, trace.a1, trace.b1, trace.a2, trace.b2).min_overlap;
  }

  // Step 4: measure the remaining copies with {R, I-R}; `out` outcomes
  // are discarded exactly as the algorithm states.
  const long total_budget = cfg.derived_budget();
  const long measured = total_budget - 2L * cfg.learner_copies;
  const double p_in = std::clamp(trace.tr_r_rho, 0.0, 1.0);
  for (long i = 0; i < measured; ++i)
    if (rng.uniform() < p_in) ++trace.survivors;
  trace.copies_used = 2L * cfg.learner_copies + measured;
  trace.oracle_required = static_cast<long>(
      std::ceil(cfg.budget_constant * cfg.r * cfg.r /
                (2.0 * cfg.epsilon * cfg.epsilon)));
  trace.survived_enough = trace.survivors >= trace.oracle_required;

  // Step 5: the in-subspace Bures oracle on rho|_R.
  Restriction restriction = restrict_to_subspace(rho, trace.r_span);
  if (cfg.oracle == BuresOracleKind::kExactRestriction) {
    trace.final_estimate = restriction.state;
  } else {
    trace.final_estimate =
        noisy_restriction(restriction.state, trace.r_span, cfg.oracle_delta);
  }
  trace.final_bures_error = bures_distance(*trace.final_estimate, rho);
  return trace;
}

std::vector<CoveringRecord> covering_experiment(int d, int r, double epsilon,
                                                double alpha, int trials,
                                                SeededRng& rng,
                                                LearnerKind learner_kind) {
  if (discard_count(epsilon, r) < 1)
    throw domain_error("covering_experiment: ceil(eps r) must be >= 1");
  const double threshold = 1.0 - epsilon * epsilon / (alpha * alpha);
  LearnerSpec learner{learner_kind, epsilon, {}};

  std::vector<CoveringRecord> records;
  records.reserve(trials);
  for (int trial = 0; trial < trials; ++trial) {
    SeededRng trial_rng = rng.derive(trial);
    CoveringRecord rec;
    rec.trial = trial;

    Projector p = haar_projector(d, r, trial_rng);
    Projector p_hat_1 = bootstrap_learner_round(p, learner, trial_rng);
    Projector p_hat_2 = bootstrap_learner_round(p, learner, trial_rng);
    Projector b1 = align_projector(p, p_hat_1, threshold);
    Projector b2 = align_projector(p, p_hat_2, threshold);
    rec.rank_b1 = b1.rank();
    rec.rank_b2 = b2.rank();
    rec.full_rank = psd_rank(b1.matrix() + b2.matrix()) == r;

    PrincipalAngles angles = principal_angles(b1, b2);
    for (double s : angles.sigma) {
      if (s > 1e-8 && s < 1.0 - 1e-8)
        rec.max_block_overlap = std::max(rec.max_block_overlap, s * s);
    }
    rec.robust_cover = robust_cover_check(b1, b2, p);

    // Sampled Lemma-4.4 probe: unit vectors in the complement of B1
    // inside supp(P) should still see most of B2.
    ComplexMatrix residual = p.frame() - b1.matrix() * p.frame();
    Projector b1_bar = Projector::onto_span(residual);
    if (b1_bar.rank() > 0) {
      ComplexMatrix b2_mat = b2.matrix();
      for (int probe = 0; probe < 200; ++probe) {
        PureState u = haar_pure_state_in(b1_bar, trial_rng);
        double value = (u.vec().adjoint() * b2_mat * u.vec())(0).real();
        rec.min_sampled_b2 = std::min(rec.min_sampled_b2, value);
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace ptomo
