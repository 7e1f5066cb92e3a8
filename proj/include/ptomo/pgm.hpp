// pgm.hpp
// The pretty good measurement for projector tomography: the exact
// closed-form expected affinity, a sampler for the pure-state case
// (Hayashi's measurement), a small-dimension dense reference simulation,
// and the mock learners driven by the bootstrap module.

#pragma once

#include <cstdint>
#include <vector>

#include "ptomo/rational.hpp"
#include "ptomo/rng.hpp"
#include "ptomo/states.hpp"

namespace ptomo {

inline constexpr int kPgmAffinityCapacity = 200;

enum class LearnerKind {
  kHayashiPure,         // real pure-state PGM, params[0] = copies
  kAdversarialDiscard,  // swaps a fixed ceil(eps r)-dim subspace out of P
  kUniformTilt,         // rotates every Jordan direction by a common angle
  kExactOracle,         // returns P itself
};

struct LearnerSpec {
  LearnerKind kind = LearnerKind::kExactOracle;
  double epsilon = 0.0;        // declared trace-distance budget
  std::vector<double> params;  // kind-specific

  // Exact promised trace distance for rank r (adversarial discard rounds
  // eps up to ceil(eps r)/r; the Hayashi learner's budget is statistical).
  double trace_budget(int r) const;
};

// Number of blocks the adversarial learner corrupts: ceil(eps * r),
// guarded against floating-point noise at integer boundaries.
int discard_count(double epsilon, int r);

// One draw from the pure-state PGM output distribution given input
// u^{x n}: overlap t = |<u_hat|u>|^2 follows the density proportional to
// t^n (1-t)^{d-2}; the rest of u_hat is a Haar direction in the
// complement with a Haar phase.
PureState hayashi_sample(const PureState& u, int n, SeededRng& rng);

// Exact E[Aff(rho_hat, rho)] of the PGM on a rank-r projector state in
// C^d with n copies, via the Schur-basis evaluation
//   (1/r^{n+1}) sum_lambda (s_l(1^d)/s_l(1^r)) dim(l)
//                sum_i s_{l+e_i}(1^r)^2 / s_{l+e_i}(1^d).
Rational pgm_expected_affinity(int n, int d, int r);

struct AffinityBoundCheck {
  Rational value;
  Rational bound;  // 1 - 3 r d / (2 n)
  bool pass = false;
};

AffinityBoundCheck pgm_affinity_bound_check(int n, int d, int r);

// Dense reference simulation of the PGM by its two-step reduction:
// weak Schur sampling, then Metropolis over U(d) targeting the in-irrep
// posterior density tr(nu_l(U Q U^dag) nu_l(P)). Output is U Q U^dag.
Projector pgm_dense_simulate(const Projector& p, int n, SeededRng& rng,
                             std::int64_t dense_limit = 1024);

// Runs the configured learner on P and returns its estimate P_hat.
Projector mock_learner_run(const LearnerSpec& spec, const Projector& p,
                           SeededRng& rng);

}  // namespace ptomo
