#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ptomo/bounds.hpp"
#include "ptomo/core.hpp"
#include "ptomo/pgm.hpp"
#include "ptomo/wss.hpp"

using namespace ptomo;

TEST_CASE("pure_moment_bound examples") {
  CHECK(pure_moment_bound(7, 3, 0) == 1);
  for (int n = 0; n <= 12; ++n)
    for (int d = 1; d <= 8; ++d)
      CHECK(pure_moment_bound(n, d, 1) == Rational(n + 1, n + d));
  CHECK(pure_moment_bound(10, 4, 1) == Rational(11, 14));
  CHECK(pure_moment_bound(10, 4, 2) == Rational(11 * 12, 14 * 15));
}

TEST_CASE("pure_moment_bound monotonicity on the grid") {
  for (int n = 1; n <= 20; ++n) {
    for (int d = 2; d <= 20; ++d) {
      for (int k = 1; k <= 20; ++k) {
        CHECK(pure_moment_bound(n, d, k) < pure_moment_bound(n, d, k - 1));
        CHECK(pure_moment_bound(n, d, k) < pure_moment_bound(n, d - 1, k));
        CHECK(pure_moment_bound(n, d, k) > pure_moment_bound(n - 1, d, k));
      }
    }
  }
}

TEST_CASE("loose bound dominates the exact bound") {
  CHECK(pure_moment_bound_loose(10, 4, 1) == doctest::Approx(11.0 / 14.0));
  CHECK(pure_moment_bound_loose(10, 4, 2) == doctest::Approx(0.64));
  CHECK(to_double(pure_moment_bound(10, 4, 2)) == doctest::Approx(132.0 / 210.0));
  for (int k = 0; k <= 6; ++k) CHECK(pure_moment_bound_loose(5, 1, k) == 1.0);

  for (int n = 0; n <= 20; ++n)
    for (int d = 1; d <= 20; ++d)
      for (int k = 0; k <= 20; ++k) {
        Rational loose_exact =
            k == 0 ? Rational(1)
                   : [&] {
                       Rational base(n + k, d + n + k - 1);
                       Rational out = 1;
                       for (int i = 0; i < k; ++i) out *= base;
                       return out;
                     }();
        CHECK(pure_moment_bound(n, d, k) <= loose_exact);
      }
}

TEST_CASE("projector_affinity_moment_bound") {
  CHECK(projector_affinity_moment_bound(5, 9, 4, 4, 3) == 1);  // r = d
  CHECK(projector_affinity_moment_bound(3, 7, 4, 2, 1) == Rational(5, 7));

  // r = 1 with lambda1 = n reduces to the pure bound, exactly.
  for (int n = 0; n <= 10; ++n)
    for (int d = 1; d <= 6; ++d)
      for (int k = 0; k <= 6; ++k)
        CHECK(projector_affinity_moment_bound(n, n, d, 1, k) ==
              pure_moment_bound(n, d, k));

  CHECK(projector_affinity_moment_bound_loose(3, 4, 2, 1) == doctest::Approx(5.0 / 7.0));
  CHECK_THROWS_AS(projector_affinity_moment_bound(0, 0, 2, 3, 1), domain_error);
}

TEST_CASE("choose_k") {
  CHECK(choose_k(0.25) == 1);
  CHECK(choose_k(0.125) == 4);
  CHECK(choose_k(Rational(1, 4)) == 1);
  CHECK(choose_k(Rational(1, 8)) == 4);
  CHECK(choose_k(Rational(1, 100)) == 625);
  // Above eps = 1/4 the floor reaches 0; documented boundary.
  CHECK(choose_k(0.3) == 0);
  CHECK_THROWS_AS(choose_k(0.0), domain_error);
  CHECK_THROWS_AS(choose_k(Rational(0)), domain_error);
}

TEST_CASE("pure_threshold") {
  CHECK(pure_threshold(64, Rational(1, 8)) == 64);
  CHECK(pure_threshold(64, 0.125) == doctest::Approx(64.0));
  // The boundary eps = 1/sqrt(48) is accepted.
  CHECK(pure_threshold(2, 1.0 / std::sqrt(48.0)) == doctest::Approx(2 * 48.0 / 64.0));
  CHECK_THROWS_AS(pure_threshold(2, 0.2), validity_error);
  CHECK_THROWS_AS(pure_threshold(1, 0.1), validity_error);
  CHECK_THROWS_AS(pure_threshold(4, Rational(0)), validity_error);
  // 1/eps^2 scaling is exact in rational mode.
  CHECK(pure_threshold(10, Rational(1, 20)) == 4 * pure_threshold(10, Rational(1, 10)));
}

TEST_CASE("projector_threshold") {
  CHECK(projector_threshold(4, 2, Rational(1, 80)) == 400);
  CHECK(projector_threshold(4, 2, 0.0125) == doctest::Approx(400.0));
  CHECK_THROWS_AS(projector_threshold(4, 3, Rational(1, 100)), validity_error);  // r > d/2
  CHECK_THROWS_AS(projector_threshold(4, 2, Rational(1, 79)), validity_error);
  CHECK_THROWS_AS(projector_threshold(1, 1, Rational(1, 100)), validity_error);
  CHECK(projector_threshold(8, 2, Rational(1, 160)) ==
        4 * projector_threshold(8, 2, Rational(1, 80)));
}

TEST_CASE("empirical Hayashi moments never exceed the pure bound") {
  const int n = 10, d = 4, samples = 20000;
  SeededRng rng(505);
  PureState u = haar_pure_state(d, rng);
  std::vector<double> overlaps(samples);
  for (int i = 0; i < samples; ++i)
    overlaps[i] = std::norm(u.vec().dot(hayashi_sample(u, n, rng).vec()));
  for (int k = 1; k <= 4; ++k) {
    std::vector<double> powered(samples);
    for (int i = 0; i < samples; ++i) powered[i] = std::pow(overlaps[i], k);
    auto [mean, se] = oracles::mean_stderr(powered);
    CHECK(mean <= to_double(pure_moment_bound(n, d, k)) + 3 * se);
  }
}

TEST_CASE("dense-PGM affinity moments sit under the averaged lambda1 bound") {
  // r = d = 2 is the spec's stated cell (trivially tight: both sides 1);
  // r = 1, d = 2 exercises the bound nontrivially.
  for (int r : {2, 1}) {
    const int d = 2, n = 3, trials = 400;
    Projector p = Projector::standard(d, r);
    DensityMatrix rho = DensityMatrix::projector_state(p);
    std::vector<std::vector<double>> powers(5, std::vector<double>(trials));
    for (int t = 0; t < trials; ++t) {
      SeededRng rng(707, t);
      Projector out = pgm_dense_simulate(p, n, rng);
      double aff = affinity(rho, DensityMatrix::projector_state(out));
      for (int k = 1; k <= 4; ++k) powers[k][t] = std::pow(aff, k);
    }
    WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, d));
    for (int k = 1; k <= 4; ++k) {
      Rational averaged = 0;
      for (const auto& [lambda, prob] : dist.table)
        averaged += prob * projector_affinity_moment_bound(lambda.row(1), n, d, r, k);
      auto [mean, se] = oracles::mean_stderr(powers[k]);
      CHECK(mean <= to_double(averaged) + 3 * se + 1e-12);
    }
  }
}

TEST_CASE("MomentBoundParams validation") {
  MomentBoundParams good{3, 4, 2, 1, 5};
  CHECK_NOTHROW(good.validate());
  MomentBoundParams rank_over_dim{3, 2, 4, 1, 0};
  CHECK_THROWS_AS(rank_over_dim.validate(), domain_error);
  MomentBoundParams negative{-1, 2, 1, 0, 0};
  CHECK_THROWS_AS(negative.validate(), domain_error);
}
