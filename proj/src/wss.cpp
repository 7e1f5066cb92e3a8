#include "ptomo/wss.hpp"

#include <algorithm>

namespace ptomo {

Spectrum::Spectrum(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw domain_error("Spectrum: empty");
  std::sort(alpha_.begin(), alpha_.end(), std::greater<Rational>());
  Rational sum = 0;
  for (const Rational& a : alpha_) {
    if (a < 0 || a > 1) throw domain_error("Spectrum: entry outside [0,1]");
    sum += a;
    if (a != 0) ++support_;
  }
  if (sum != 1) throw domain_error("Spectrum: entries must sum to exactly 1");
  uniform_ = true;
  for (int i = 1; i < support_; ++i)
    if (alpha_[i] != alpha_[0]) uniform_ = false;
}

Spectrum Spectrum::uniform(int r, int d) {
  if (r < 1 || r > d) throw domain_error("Spectrum::uniform: need 1 <= r <= d");
  std::vector<Rational> alpha(d, Rational(0));
  for (int i = 0; i < r; ++i) alpha[i] = Rational(1, r);
  return Spectrum(std::move(alpha));
}

Rational WssDistribution::prob(const Partition& lambda) const {
  for (const auto& [mu, p] : table)
    if (mu == lambda) return p;
  return 0;
}

WssDistribution wss_distribution(int n, const Spectrum& spectrum, int schur_limit) {
  if (n < 0) throw domain_error("wss_distribution: n must be nonnegative");
  WssDistribution dist;
  dist.n = n;
  dist.dim = spectrum.dim();
  const int max_len = std::min(spectrum.dim(), spectrum.support_size());
  if (spectrum.is_uniform()) {
    // dim(lambda) * s_lambda(1^r / r) = dim(lambda) * num_ssyt(lambda, r) / r^n
    const int r = spectrum.support_size();
    const BigInt denom = int_pow(r, n);
    for (const Partition& lambda : partitions_of(n, max_len)) {
      BigInt count = num_ssyt(lambda, r);
      if (count == 0) continue;
      dist.table.emplace_back(lambda, Rational(num_syt(lambda) * count, denom));
    }
  } else {
    if (n > schur_limit)
      throw capacity_error("wss_distribution: n exceeds the Schur enumeration limit");
    for (const Partition& lambda : partitions_of(n, max_len)) {
      Rational s = schur_eval(lambda, spectrum.alpha(), schur_limit);
      if (s == 0) continue;
      dist.table.emplace_back(lambda, Rational(num_syt(lambda)) * s);
    }
  }
  Rational total = 0;
  for (const auto& [lambda, p] : dist.table) total += p;
  if (total != 1)
    throw std::logic_error("wss_distribution: probabilities do not sum to 1");
  return dist;
}

Partition wss_sample(const WssDistribution& dist, SeededRng& rng) {
  if (dist.table.empty()) throw domain_error("wss_sample: empty distribution");
  double u = rng.uniform();
  double cdf = 0.0;
  for (const auto& [lambda, p] : dist.table) {
    cdf += to_double(p);
    if (u < cdf) return lambda;
  }
  return dist.table.back().first;  // guard against rounding at the top end
}

Lambda1Stats lambda1_stats(int n, int r, int samples, SeededRng& rng) {
  if (samples < 1) throw domain_error("lambda1_stats: need samples >= 1");
  WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, r));
  const double threshold = 2.0 * n / r;
  double sum = 0.0;
  int exceed = 0;
  for (int i = 0; i < samples; ++i) {
    int lambda1 = wss_sample(dist, rng).row(1);
    sum += lambda1;
    if (lambda1 >= threshold) ++exceed;
  }
  return {sum / samples, static_cast<double>(exceed) / samples};
}

}  // namespace ptomo
