#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ptomo/bounds.hpp"
#include "ptomo/core.hpp"
#include "ptomo/jordan.hpp"
#include "ptomo/pgm.hpp"

using namespace ptomo;

TEST_CASE("hayashi_sample mean overlap attains (n+1)/(n+d)") {
  const int n = 10, d = 4, samples = 100000;
  SeededRng rng(41);
  PureState u = haar_pure_state(d, rng);
  std::vector<double> overlaps(samples);
  for (int i = 0; i < samples; ++i)
    overlaps[i] = std::norm(u.vec().dot(hayashi_sample(u, n, rng).vec()));
  auto [mean, se] = oracles::mean_stderr(overlaps);
  CHECK(std::abs(mean - 11.0 / 14.0) <= 3 * se);

  // Many copies pin the estimate.
  SeededRng rng2(42);
  PureState v = haar_pure_state(2, rng2);
  std::vector<double> big(2000);
  for (int i = 0; i < 2000; ++i)
    big[i] = std::norm(v.vec().dot(hayashi_sample(v, 10000, rng2).vec()));
  CHECK(oracles::mean_stderr(big).mean >= 0.999);

  CHECK_THROWS_AS(hayashi_sample(haar_pure_state(1, rng2), 3, rng2), domain_error);
  CHECK_THROWS_AS(hayashi_sample(u, 0, rng2), domain_error);
}

TEST_CASE("hayashi overlap law matches the rejection-sampling oracle") {
  const int n = 10, d = 4, samples = 100000;
  SeededRng rng(43);
  PureState u = haar_pure_state(d, rng);
  std::vector<double> sampled(samples), rejected(samples);
  for (int i = 0; i < samples; ++i)
    sampled[i] = std::norm(u.vec().dot(hayashi_sample(u, n, rng).vec()));
  SeededRng oracle_rng(44);
  for (int i = 0; i < samples; ++i)
    rejected[i] = oracles::hayashi_overlap_rejection(n, d, oracle_rng);
  double stat = oracles::ks_statistic(sampled, rejected);
  CHECK(stat < oracles::ks_critical_1pct(samples, samples));
}

TEST_CASE("pgm_expected_affinity closed form") {
  CHECK(pgm_expected_affinity(1, 2, 1) == Rational(2, 3));
  for (int n = 1; n <= 10; ++n)
    for (int d = 1; d <= 4; ++d) CHECK(pgm_expected_affinity(n, d, d) == 1);
  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= 6; ++d)
      CHECK(pgm_expected_affinity(n, d, 1) == Rational(n + 1, n + d));
  CHECK_THROWS_AS(pgm_expected_affinity(3, 2, 3), domain_error);
  CHECK_THROWS_AS(pgm_expected_affinity(201, 3, 2), capacity_error);
}

TEST_CASE("pgm_affinity_bound_check") {
  AffinityBoundCheck small = pgm_affinity_bound_check(1, 2, 1);
  CHECK(small.value == Rational(2, 3));
  CHECK(small.bound == Rational(-2));
  CHECK(small.pass);
  for (int n = 1; n <= 16; ++n)
    for (int d = 1; d <= 4; ++d)
      for (int r = 1; r <= d; ++r) CHECK(pgm_affinity_bound_check(n, d, r).pass);
}

TEST_CASE("pgm expected affinity is nondecreasing in n (reported, not asserted)") {
  for (int d = 2; d <= 4; ++d) {
    for (int r = 1; r < d; ++r) {
      Rational prev = 0;
      for (int n = 1; n <= 12; ++n) {
        Rational value = pgm_expected_affinity(n, d, r);
        if (value < prev)
          MESSAGE("monotonicity dip at n=", n, " d=", d, " r=", r);
        prev = value;
      }
    }
  }
}

TEST_CASE("pgm_dense_simulate") {
  SeededRng rng(45);
  // r = d returns the identity projector.
  Projector full = pgm_dense_simulate(Projector::identity(3), 2, rng);
  CHECK(approx_equal(full.matrix(), ComplexMatrix::Identity(3, 3)));

  // Determinism per (seed, stream).
  Projector p = haar_projector(2, 1, rng);
  SeededRng a(46, 0), b(46, 0), c(46, 1);
  Projector out_a = pgm_dense_simulate(p, 3, a);
  Projector out_b = pgm_dense_simulate(p, 3, b);
  Projector out_c = pgm_dense_simulate(p, 3, c);
  CHECK(approx_equal(out_a.matrix(), out_b.matrix(), 1e-14));
  CHECK_FALSE(approx_equal(out_a.matrix(), out_c.matrix(), 1e-3));

  CHECK_THROWS_AS(pgm_dense_simulate(haar_projector(2, 1, rng), 11, rng), capacity_error);
}

TEST_CASE("pgm_dense_simulate mean affinity matches the closed form") {
  const int n = 3, d = 2, r = 1, trials = 6000;
  std::vector<double> affs(trials);
  for (int t = 0; t < trials; ++t) {
    SeededRng rng(47, t);
    Projector p = haar_projector(d, r, rng);
    Projector out = pgm_dense_simulate(p, n, rng);
    affs[t] = (p.frame().adjoint() * out.frame()).squaredNorm();
  }
  auto [mean, se] = oracles::mean_stderr(affs);
  CHECK(std::abs(mean - to_double(pgm_expected_affinity(n, d, r))) <= 3 * se);
}

TEST_CASE("mock learners meet their trace-distance budgets exactly") {
  SeededRng rng(48);

  Projector p = haar_projector(20, 10, rng);
  LearnerSpec exact{LearnerKind::kExactOracle, 0.3, {}};
  CHECK(blockwise_metrics(jordan_decompose(p, mock_learner_run(exact, p, rng)))
            .trace_distance <= 1e-9);

  LearnerSpec discard{LearnerKind::kAdversarialDiscard, 0.2, {}};
  Projector hat = mock_learner_run(discard, p, rng);
  JordanDecomposition dec = jordan_decompose(p, hat);
  int zeros = 0, ones = 0;
  for (const JordanBlock& b : dec.blocks) {
    if (b.omega <= 1e-9) ++zeros;
    if (b.omega >= 1.0 - 1e-9) ++ones;
  }
  CHECK(zeros == 2);
  CHECK(ones == 8);
  CHECK(std::abs(blockwise_metrics(dec).trace_distance - 0.2) <= 1e-9);

  LearnerSpec tilt{LearnerKind::kUniformTilt, 0.1, {}};
  Projector tilted = mock_learner_run(tilt, p, rng);
  JordanDecomposition tdec = jordan_decompose(p, tilted);
  for (const JordanBlock& b : tdec.blocks)
    CHECK(b.omega == doctest::Approx(std::sqrt(1.0 - 0.01)).epsilon(1e-9));
  CHECK(std::abs(blockwise_metrics(tdec).trace_distance - 0.1) <= 1e-9);
  // The first extreme: a uniform-error estimate is already Bures-close.
  double bures = bures_from_fidelity(blockwise_metrics(tdec).fidelity);
  CHECK(std::abs(bures - 0.1) <= 2e-3);

  // Budget holds across random instances for both mock kinds.
  for (int t = 0; t < 30; ++t) {
    SeededRng tr(49, t);
    Projector q = haar_projector(12, 4, tr);
    for (LearnerKind kind :
         {LearnerKind::kAdversarialDiscard, LearnerKind::kUniformTilt}) {
      LearnerSpec spec{kind, 0.25, {}};
      Projector est = mock_learner_run(spec, q, tr);
      double td = blockwise_metrics(jordan_decompose(q, est)).trace_distance;
      CHECK(td <= spec.trace_budget(4) + 1e-9);
    }
  }
}

TEST_CASE("adversarial discard is a function of the subspace, not the frame gauge") {
  SeededRng rng(50);
  Projector p = haar_projector(10, 4, rng);
  ComplexMatrix gauge = haar_unitary(4, rng);
  Projector p_regauged = Projector::from_frame(p.frame() * gauge);
  LearnerSpec spec{LearnerKind::kAdversarialDiscard, 0.3, {}};
  SeededRng r1(51), r2(51);
  Projector out1 = mock_learner_run(spec, p, r1);
  Projector out2 = mock_learner_run(spec, p_regauged, r2);
  CHECK(approx_equal(out1.matrix(), out2.matrix(), 1e-8));
}

TEST_CASE("mock learner domain errors") {
  SeededRng rng(52);
  Projector p = haar_projector(4, 3, rng);
  LearnerSpec discard{LearnerKind::kAdversarialDiscard, 0.9, {}};
  CHECK_THROWS_AS(mock_learner_run(discard, p, rng), domain_error);  // complement too small
  LearnerSpec tilt{LearnerKind::kUniformTilt, 0.1, {}};
  CHECK_THROWS_AS(mock_learner_run(tilt, p, rng), domain_error);  // d < 2r
  LearnerSpec bad_eps{LearnerKind::kUniformTilt, 1.5, {}};
  CHECK_THROWS_AS(mock_learner_run(bad_eps, haar_projector(8, 2, rng), rng), domain_error);
}

TEST_CASE("hayashi_pure learner") {
  SeededRng rng(53);
  Projector p = haar_projector(4, 1, rng);
  LearnerSpec spec{LearnerKind::kHayashiPure, 0.5, {200.0}};
  Projector hat = mock_learner_run(spec, p, rng);
  CHECK(hat.rank() == 1);
  double overlap = std::norm((p.frame().adjoint() * hat.frame())(0, 0));
  CHECK(overlap >= 0.9);  // 200 copies at d = 4 land close

  CHECK_THROWS_AS(mock_learner_run(spec, haar_projector(4, 2, rng), rng), domain_error);
  LearnerSpec no_copies{LearnerKind::kHayashiPure, 0.5, {}};
  CHECK_THROWS_AS(mock_learner_run(no_copies, p, rng), domain_error);
}
