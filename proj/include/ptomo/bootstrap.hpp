// bootstrap.hpp
// End-to-end simulation of the bootstrapped algorithm A': two rotated
// learner rounds, the span projector R, the {R, I-R} measurement on the
// copy budget, and a pluggable in-subspace Bures oracle, with full
// diagnostics for every intermediate object.

#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "ptomo/core.hpp"
#include "ptomo/pgm.hpp"
#include "ptomo/states.hpp"

namespace ptomo {

enum class BuresOracleKind {
  kExactRestriction,  // returns rho|_R itself
  kNoisy,             // returns a Bures-delta tilt of rho|_R inside supp(R)
};

struct BootstrapConfig {
  int d = 0;
  int r = 0;
  double epsilon = 0.0;
  double alpha = 0.2;
  LearnerSpec learner;
  int learner_copies = 0;        // the black box's n (copy accounting only)
  double budget_constant = 16.0; // c in n' = 2n + c r^2/eps^2
  long copies_budget = 0;        // 0 -> derived from the formula above
  BuresOracleKind oracle = BuresOracleKind::kExactRestriction;
  double oracle_delta = 0.0;

  long derived_budget() const;
  void validate() const;
};

struct BootstrapTrace {
  Projector p_hat_1, p_hat_2;  // un-rotated learner outputs
  Projector a1, a2, b1, b2;    // aligned subprojectors
  Projector r_span;            // projector onto span{P_hat_1, P_hat_2}
  double tr_r_rho = 0.0;       // tr(R rho)
  double learner_td_1 = 0.0, learner_td_2 = 0.0;
  bool robust_cover = false;
  double lift_min_overlap = std::numeric_limits<double>::quiet_NaN();
  long copies_used = 0;
  long survivors = 0;          // `in` outcomes in the step-4 measurement
  long oracle_required = 0;
  bool survived_enough = false;
  std::optional<DensityMatrix> final_estimate;
  double final_bures_error = std::numeric_limits<double>::quiet_NaN();
};

// One rotated learner round: draw Haar U, present U P U^dag to the
// learner, un-rotate its output.
Projector bootstrap_learner_round(const Projector& p, const LearnerSpec& learner,
                                  SeededRng& rng);

// Projector onto the combined column span, rank by singular-value cutoff.
Projector span_projector(const Projector& p1, const Projector& p2);

BootstrapTrace run_bootstrap(const BootstrapConfig& cfg, const Projector& p,
                             SeededRng& rng);

struct CoveringRecord {
  int trial = 0;
  int rank_b1 = 0, rank_b2 = 0;
  bool full_rank = false;          // rank(B1 + B2) == r
  double max_block_overlap = 0.0;  // squared, over 2x2 Jordan blocks
  bool robust_cover = false;
  double min_sampled_b2 = 1.0;     // min <u|B2|u> over sampled u in supp(B1bar)
};

// Per-trial robust-covering diagnostics; 200 sampled unit vectors per
// trial probe Lemma-4.4-style coverage of the complement of B1.
std::vector<CoveringRecord> covering_experiment(
    int d, int r, double epsilon, double alpha, int trials, SeededRng& rng,
    LearnerKind learner = LearnerKind::kAdversarialDiscard);

}  // namespace ptomo
