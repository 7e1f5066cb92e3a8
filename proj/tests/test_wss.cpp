#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "oracles.hpp"
#include "ptomo/core.hpp"
#include "ptomo/schur_weyl.hpp"
#include "ptomo/wss.hpp"

using namespace ptomo;

namespace {

Partition shape(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("spectrum validation") {
  CHECK(Spectrum::uniform(2, 4).support_size() == 2);
  CHECK(Spectrum::uniform(2, 4).is_uniform());
  CHECK_THROWS_AS(Spectrum::uniform(0, 4), domain_error);
  CHECK_THROWS_AS(Spectrum::uniform(5, 4), domain_error);
  CHECK_THROWS_AS(Spectrum({Rational(1, 2), Rational(1, 3)}), domain_error);
  CHECK_THROWS_AS(Spectrum({Rational(3, 2), Rational(-1, 2)}), domain_error);
  Spectrum sorted({Rational(1, 6), Rational(1, 2), Rational(1, 3)});
  CHECK(sorted.alpha()[0] == Rational(1, 2));  // sorted descending
  CHECK_FALSE(sorted.is_uniform());
}

TEST_CASE("wss_distribution examples") {
  WssDistribution one = wss_distribution(1, Spectrum::uniform(3, 3));
  REQUIRE(one.table.size() == 1);
  CHECK(one.table[0].first == shape({1}));
  CHECK(one.table[0].second == 1);

  WssDistribution two = wss_distribution(2, Spectrum::uniform(2, 2));
  REQUIRE(two.table.size() == 2);
  CHECK(two.prob(shape({2})) == Rational(3, 4));
  CHECK(two.prob(shape({1, 1})) == Rational(1, 4));

  // Pure state: always the single-row diagram.
  std::vector<Rational> pure_alpha{Rational(1), Rational(0), Rational(0)};
  for (int n = 1; n <= 6; ++n) {
    WssDistribution pure = wss_distribution(n, Spectrum(pure_alpha));
    REQUIRE(pure.table.size() == 1);
    CHECK(pure.table[0].first == shape({n}));
    CHECK(pure.table[0].second == 1);
  }
}

TEST_CASE("wss_distribution is exactly normalized with support length <= r") {
  for (int n = 1; n <= 8; ++n) {
    for (int r = 1; r <= 4; ++r) {
      for (int d = r; d <= 6; ++d) {
        WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, d));
        Rational total = 0;
        for (const auto& [lambda, p] : dist.table) {
          CHECK(lambda.length() <= r);
          CHECK(p > 0);
          total += p;
        }
        CHECK(total == 1);
      }
    }
  }
  // Non-uniform spectra normalize exactly too.
  Spectrum skew({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  for (int n = 1; n <= 6; ++n) {
    Rational total = 0;
    for (const auto& [lambda, p] : wss_distribution(n, skew).table) total += p;
    CHECK(total == 1);
  }
}

TEST_CASE("wss probabilities match dense character-projector traces") {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 3; ++d) {
      // Projector states of every rank, plus a non-uniform state.
      for (int r = 1; r <= d; ++r) {
        ComplexMatrix rho_n =
            tensor_power(DensityMatrix::projector_state(Projector::standard(d, r)).mat(), n);
        WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, d));
        for (const Partition& lambda : partitions_of(n, d)) {
          double dense = (isotypic_projector(lambda, n, d) * rho_n).trace().real();
          CHECK(std::abs(dense - to_double(dist.prob(lambda))) <= 1e-10);
        }
      }
      if (d == 3) {
        std::vector<Rational> alpha{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
        ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
        rho(0, 0) = 0.5;
        rho(1, 1) = 1.0 / 3.0;
        rho(2, 2) = 1.0 / 6.0;
        ComplexMatrix rho_n = tensor_power(rho, n);
        WssDistribution dist = wss_distribution(n, Spectrum(alpha));
        for (const Partition& lambda : partitions_of(n, d)) {
          double dense = (isotypic_projector(lambda, n, d) * rho_n).trace().real();
          CHECK(std::abs(dense - to_double(dist.prob(lambda))) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("wss capacity error for large non-uniform spectra") {
  Spectrum skew({Rational(2, 3), Rational(1, 3), Rational(0)});
  CHECK_THROWS_AS(wss_distribution(13, skew), capacity_error);
  // The uniform fast path reaches far beyond the enumeration limit.
  WssDistribution big = wss_distribution(60, Spectrum::uniform(2, 2));
  Rational total = 0;
  for (const auto& [lambda, p] : big.table) total += p;
  CHECK(total == 1);
}

TEST_CASE("wss_sample determinism and point mass") {
  std::vector<Rational> pure_alpha{Rational(1), Rational(0)};
  WssDistribution point = wss_distribution(4, Spectrum(pure_alpha));
  SeededRng rng(1);
  for (int i = 0; i < 20; ++i) CHECK(wss_sample(point, rng) == shape({4}));

  WssDistribution dist = wss_distribution(5, Spectrum::uniform(2, 3));
  SeededRng a(9, 4), b(9, 4);
  for (int i = 0; i < 50; ++i) CHECK(wss_sample(dist, a) == wss_sample(dist, b));
}

TEST_CASE("wss_sample frequencies match the table") {
  WssDistribution dist = wss_distribution(2, Spectrum::uniform(2, 2));
  SeededRng rng(77);
  const int n = 100000;
  int row2 = 0;
  for (int i = 0; i < n; ++i)
    if (wss_sample(dist, rng) == shape({2})) ++row2;
  double freq = static_cast<double>(row2) / n;
  double se = std::sqrt(0.75 * 0.25 / n);
  CHECK(std::abs(freq - 0.75) <= 3 * se);
}

TEST_CASE("lambda1_stats") {
  SeededRng rng(3);
  Lambda1Stats pure = lambda1_stats(7, 1, 2000, rng);
  CHECK(pure.mean == doctest::Approx(7.0));  // lambda_1 = n always at r = 1
  CHECK(pure.frac_exceeding == doctest::Approx(0.0));

  // E[lambda_1] <= n/r + 2 sqrt(n), checked empirically at 3 sigma.
  SeededRng rng2(4);
  const int samples = 10000;
  Lambda1Stats stats = lambda1_stats(10, 2, samples, rng2);
  double bound = 10.0 / 2 + 2 * std::sqrt(10.0);
  CHECK(stats.mean <= bound + 3 * (10.0 / std::sqrt(samples)));

  // Desk scale cannot reach n >= 81 r^2; the tail is reported only.
  SeededRng rng3(5);
  Lambda1Stats tail = lambda1_stats(12, 2, 2000, rng3);
  CHECK(tail.frac_exceeding >= 0.0);
  CHECK(tail.frac_exceeding <= 1.0);
  MESSAGE("lambda1 tail fraction at n=12, r=2: ", tail.frac_exceeding);
}

TEST_CASE("symmetric group characters (Murnaghan-Nakayama)") {
  // chi at the identity class counts standard tableaux.
  for (int n = 1; n <= 6; ++n) {
    Partition identity_class(std::vector<int>(n, 1));
    for (const Partition& lambda : partitions_of(n, n))
      CHECK(sn_character(lambda, identity_class) == num_syt(lambda));
  }
  // Full S_3 character table.
  CHECK(sn_character(shape({3}), shape({1, 1, 1})) == 1);
  CHECK(sn_character(shape({3}), shape({2, 1})) == 1);
  CHECK(sn_character(shape({3}), shape({3})) == 1);
  CHECK(sn_character(shape({2, 1}), shape({1, 1, 1})) == 2);
  CHECK(sn_character(shape({2, 1}), shape({2, 1})) == 0);
  CHECK(sn_character(shape({2, 1}), shape({3})) == -1);
  CHECK(sn_character(shape({1, 1, 1}), shape({1, 1, 1})) == 1);
  CHECK(sn_character(shape({1, 1, 1}), shape({2, 1})) == -1);
  CHECK(sn_character(shape({1, 1, 1}), shape({3})) == 1);

  // Column orthogonality at the identity: sum of squares is n!.
  for (int n = 1; n <= 6; ++n) {
    BigInt total = 0;
    Partition identity_class(std::vector<int>(n, 1));
    for (const Partition& lambda : partitions_of(n, n)) {
      BigInt chi = sn_character(lambda, identity_class);
      total += chi * chi;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("cycle types and permutation operators") {
  CHECK(cycle_type({0, 1, 2}) == shape({1, 1, 1}));
  CHECK(cycle_type({1, 0, 2}) == shape({2, 1}));
  CHECK(cycle_type({1, 2, 0}) == shape({3}));

  // The swap operator on C^2 x C^2.
  ComplexMatrix swap = permutation_operator({1, 0}, 2);
  ComplexMatrix expected(4, 4);
  expected << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  CHECK(approx_equal(swap, expected, 1e-14));

  // P(pi) Q(A) P(pi)^dag = Q(A) and homomorphism property.
  SeededRng rng(12);
  ComplexMatrix a = haar_unitary(2, rng);
  ComplexMatrix a3 = tensor_power(a, 3);
  std::vector<int> pi{2, 0, 1};
  ComplexMatrix p_op = permutation_operator(pi, 2);
  CHECK(approx_equal(p_op * a3 * p_op.adjoint(), a3, 1e-10));

  // Isotypic projectors resolve the identity and are idempotent.
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 3; ++d) {
      std::int64_t dim = 1;
      for (int i = 0; i < n; ++i) dim *= d;
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      for (const Partition& lambda : partitions_of(n, d)) {
        ComplexMatrix proj = isotypic_projector(lambda, n, d);
        CHECK(approx_equal(proj * proj, proj, 1e-10));
        sum += proj;
      }
      CHECK(approx_equal(sum, ComplexMatrix::Identity(dim, dim), 1e-10));
    }
  }
}
