// wss.hpp
// Weak Schur sampling: the exact outcome distribution over Young
// diagrams for n copies of a state with rational spectrum, plus a
// seeded inverse-CDF sampler and first-row statistics.

#pragma once

#include <utility>
#include <vector>

#include "ptomo/partition.hpp"
#include "ptomo/rational.hpp"
#include "ptomo/rep_theory.hpp"
#include "ptomo/rng.hpp"

namespace ptomo {

class Spectrum {
 public:
  // Entries are sorted descending; they must lie in [0,1] and sum to 1.
  explicit Spectrum(std::vector<Rational> alpha);

  // (1/r, ..., 1/r, 0, ..., 0) in C^d.
  static Spectrum uniform(int r, int d);

  const std::vector<Rational>& alpha() const { return alpha_; }
  int dim() const { return static_cast<int>(alpha_.size()); }
  int support_size() const { return support_; }
  bool is_uniform() const { return uniform_; }

 private:
  std::vector<Rational> alpha_;
  int support_ = 0;
  bool uniform_ = false;
};

struct WssDistribution {
  int n = 0;
  int dim = 0;
  // Nonzero probabilities only, in reverse-lexicographic partition order.
  std::vector<std::pair<Partition, Rational>> table;

  // 0 for partitions outside the support.
  Rational prob(const Partition& lambda) const;
};

// table[lambda] = dim(lambda) * s_lambda(alpha), exact. Uniform spectra
// use the hook-content fast path; general spectra are limited by the
// Schur enumeration capacity.
WssDistribution wss_distribution(int n, const Spectrum& spectrum,
                                 int schur_limit = kDefaultSchurEnumerationLimit);

// Inverse-CDF draw over the fixed table order; deterministic per seed.
Partition wss_sample(const WssDistribution& dist, SeededRng& rng);

struct Lambda1Stats {
  double mean = 0.0;             // empirical E[lambda_1]
  double frac_exceeding = 0.0;   // empirical Pr[lambda_1 >= 2n/r]
};

// Monte-Carlo first-row statistics for the uniform-on-r spectrum.
Lambda1Stats lambda1_stats(int n, int r, int samples, SeededRng& rng);

}  // namespace ptomo
