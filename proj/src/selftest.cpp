#include <cmath>
#include <iostream>

#include "ptomo/bootstrap.hpp"
#include "ptomo/bounds.hpp"
#include "ptomo/cli.hpp"
#include "ptomo/core.hpp"
#include "ptomo/jordan.hpp"
#include "ptomo/pgm.hpp"
#include "ptomo/rep_theory.hpp"
#include "ptomo/schur_weyl.hpp"
#include "ptomo/wss.hpp"

namespace ptomo::cli {

namespace {

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  }
};

bool metric_inequalities(int pairs, std::uint64_t seed) {
  for (int t = 0; t < pairs; ++t) {
    SeededRng rng(seed, t);
    int d = 2 + static_cast<int>(rng.uniform_int(5));
    DensityMatrix rho = DensityMatrix::random(d, rng);
    DensityMatrix sigma = DensityMatrix::random(d, rng);
    double td = trace_distance(rho, sigma);
    double f = fidelity(rho, sigma);
    double db = bures_distance(rho, sigma);
    double aff = affinity(rho, sigma);
    const double slack = 1e-8;
    if (1.0 - f > td + slack) return false;
    if (td > std::sqrt(std::max(0.0, 1.0 - f * f)) + slack) return false;
    if (0.5 * db * db > td + slack || td > db + slack) return false;
    if (f * f > aff + slack || aff > f + slack) return false;
  }
  return true;
}

bool jordan_equivalence(int pairs, std::uint64_t seed) {
  for (int t = 0; t < pairs; ++t) {
    SeededRng rng(seed, 1000 + t);
    int d = 2 + static_cast<int>(rng.uniform_int(15));
    int r = 1 + static_cast<int>(rng.uniform_int(std::min(5, d)));
    Projector p = haar_projector(d, r, rng);
    Projector q = haar_projector(d, r, rng);
    BlockwiseMetrics m = blockwise_metrics(jordan_decompose(p, q));
    DensityMatrix rho = DensityMatrix::projector_state(p);
    DensityMatrix sigma = DensityMatrix::projector_state(q);
    if (std::abs(m.trace_distance - trace_distance(rho, sigma)) > 1e-8) return false;
    if (std::abs(m.fidelity - fidelity(rho, sigma)) > 1e-8) return false;
    if (std::abs(m.affinity - affinity(rho, sigma)) > 1e-8) return false;
  }
  return true;
}

bool wss_normalization(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= 4; ++r) {
      for (int d = r; d <= 6; ++d) {
        WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, d));
        Rational total = 0;
        for (const auto& [lambda, p] : dist.table) {
          if (lambda.length() > r) return false;
          total += p;
        }
        if (total != 1) return false;
      }
    }
  }
  return true;
}

bool wss_dense_agreement() {
  // Exact table vs tr(Pi_lambda rho^{x n}) with dense character projectors.
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 3; ++d) {
      for (int r = 1; r <= d; ++r) {
        Projector p = Projector::standard(d, r);
        ComplexMatrix rho_n =
            tensor_power(DensityMatrix::projector_state(p).mat(), n);
        WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, d));
        for (const Partition& lambda : partitions_of(n, d)) {
          double dense =
              (isotypic_projector(lambda, n, d) * rho_n).trace().real();
          if (std::abs(dense - to_double(dist.prob(lambda))) > 1e-9) return false;
        }
      }
    }
  }
  return true;
}

bool pure_moment_identity(int grid) {
  for (int n = 1; n <= grid; ++n)
    for (int d = 1; d <= grid; ++d)
      if (pure_moment_bound(n, d, 1) != Rational(n + 1, n + d)) return false;
  return true;
}

bool pgm_closed_form(int n_max, int d_max) {
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 1; d <= d_max; ++d) {
      if (pgm_expected_affinity(n, d, 1) != Rational(n + 1, n + d)) return false;
      if (pgm_expected_affinity(n, d, d) != 1) return false;
    }
  }
  return true;
}

bool threshold_arithmetic() {
  if (pure_threshold(64, Rational(1, 8)) != 64) return false;
  if (projector_threshold(4, 2, Rational(1, 80)) != 400) return false;
  if (choose_k(Rational(1, 8)) != 4 || choose_k(Rational(1, 4)) != 1) return false;
  return true;
}

bool content_maximality(int size_max, int k_max, int d_max) {
  // lambda ranges over length <= r, the shapes weak Schur sampling can
  // produce on a rank-r state; beyond that the first-row claim fails
  // (paired negative factors can beat it).
  for (int d = 2; d <= d_max; ++d) {
    for (int r = 1; r < d; ++r) {
      for (int sz = 0; sz <= size_max; ++sz) {
        for (const Partition& lambda : partitions_of(sz, r)) {
          for (int k = 1; k <= k_max; ++k) {
            Partition first_row = lambda.size() == 0 && lambda.length() == 0
                                      ? Partition(std::vector<int>{k})
                                      : [&] {
                                          std::vector<int> parts = lambda.parts();
                                          if (parts.empty()) parts.push_back(k);
                                          else parts[0] += k;
                                          return Partition(parts);
                                        }();
            Rational best = content_ratio_product(lambda, first_row, r, d);
            // Exhaustive search over all tau obtained by adding k boxes.
            std::vector<Partition> frontier{lambda};
            for (int step = 0; step < k; ++step) {
              std::vector<Partition> next;
              for (const Partition& tau : frontier)
                for (const Partition& child : pieri_expand(tau, d))
                  next.push_back(child);
              frontier = std::move(next);
            }
            for (const Partition& tau : frontier)
              if (content_ratio_product(lambda, tau, r, d) > best) return false;
          }
        }
      }
    }
  }
  return true;
}

bool hayashi_mean(int samples, std::uint64_t seed) {
  SeededRng rng(seed);
  PureState u = haar_pure_state(4, rng);
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    double t = std::norm(u.vec().dot(hayashi_sample(u, 10, rng).vec()));
    mean += t;
    sq += t * t;
  }
  mean /= samples;
  double se = std::sqrt(std::max(0.0, sq / samples - mean * mean) / samples);
  return std::abs(mean - 11.0 / 14.0) <= 4 * se;
}

bool bootstrap_roundtrip(bool fast, std::uint64_t seed) {
  BootstrapConfig cfg;
  cfg.d = fast ? 24 : 40;
  cfg.r = fast ? 8 : 12;
  cfg.epsilon = 0.1;
  cfg.alpha = 0.3;
  cfg.learner = {LearnerKind::kExactOracle, 0.5, {}};
  SeededRng rng(seed);
  Projector p = haar_projector(cfg.d, cfg.r, rng);
  BootstrapTrace exact = run_bootstrap(cfg, p, rng);
  if (std::abs(exact.tr_r_rho - 1.0) > 1e-9) return false;
  if (exact.final_bures_error > 1e-6) return false;

  cfg.learner = {LearnerKind::kAdversarialDiscard, 0.1, {}};
  int good = 0, trials = fast ? 5 : 20;
  for (int t = 0; t < trials; ++t) {
    SeededRng trial_rng(seed, 77 + t);
    Projector pt = haar_projector(cfg.d, cfg.r, trial_rng);
    BootstrapTrace trace = run_bootstrap(cfg, pt, trial_rng);
    double target = 1.0 - 3.0 * cfg.epsilon * cfg.epsilon / (cfg.alpha * cfg.alpha);
    if (trace.tr_r_rho >= target && trace.survived_enough) ++good;
  }
  return good >= trials - 1;
}

bool sym_subspace_small() {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      double tr = sym_projector(n, d).trace().real();
      double expected = sym_dimension(n, d).convert_to<double>();
      if (std::abs(tr - expected) > 1e-8 * expected) return false;
    }
  }
  return true;
}

}  // namespace

bool selftest(bool fast, std::ostream& out) {
  Reporter rep{out};
  const std::uint64_t seed = 20240915;
  rep.check("metric inequalities", metric_inequalities(fast ? 300 : 2000, seed));
  rep.check("jordan blockwise equivalence", jordan_equivalence(fast ? 30 : 200, seed));
  rep.check("wss exact normalization + support", wss_normalization(fast ? 6 : 10));
  rep.check("wss dense character-projector agreement", wss_dense_agreement());
  rep.check("pure moment identity", pure_moment_identity(fast ? 20 : 50));
  rep.check("pgm closed form (r=1 and r=d)", pgm_closed_form(fast ? 4 : 8, fast ? 4 : 6));
  rep.check("threshold arithmetic", threshold_arithmetic());
  rep.check("content-ratio maximality", content_maximality(fast ? 4 : 6, 3, fast ? 4 : 5));
  rep.check("hayashi mean overlap", hayashi_mean(fast ? 20000 : 100000, seed));
  rep.check("bootstrap exact + adversarial", bootstrap_roundtrip(fast, seed));
  rep.check("symmetric subspace dimension", sym_subspace_small());
  out << (rep.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return rep.failures == 0;
}

}  // namespace ptomo::cli
