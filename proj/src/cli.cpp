#include "ptomo/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "ptomo/bootstrap.hpp"
#include "ptomo/bounds.hpp"
#include "ptomo/core.hpp"
#include "ptomo/jordan.hpp"
#include "ptomo/pgm.hpp"
#include "ptomo/rep_theory.hpp"
#include "ptomo/wss.hpp"

namespace ptomo::cli {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fmt(const Rational& q) { return to_string(q); }

class CsvWriter {
 public:
  CsvWriter(std::ostream& fallback, const std::string& path) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw domain_error("cannot open output file: " + path);
      out_ = file_.get();
    }
  }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) *out_ << ',';
      *out_ << fields[i];
    }
    *out_ << '\n';
  }

 private:
  std::ostream* out_;
  std::unique_ptr<std::ofstream> file_;
};

LearnerSpec parse_learner(const std::string& name, double epsilon) {
  if (name == "exact") return {LearnerKind::kExactOracle, epsilon, {}};
  if (name == "adversarial") return {LearnerKind::kAdversarialDiscard, epsilon, {}};
  if (name == "tilt") return {LearnerKind::kUniformTilt, epsilon, {}};
  throw domain_error("unknown learner '" + name + "' (exact|adversarial|tilt)");
}

int cmd_metrics(int d, int trials, std::uint64_t seed, const std::string& out_path,
                std::ostream& out) {
  CsvWriter csv(out, out_path);
  csv.row({"trial", "trace_distance", "fidelity", "bures", "affinity",
           "fuchs_van_de_graaf_ok", "bures_sandwich_ok", "affinity_sandwich_ok"});
  for (int t = 0; t < trials; ++t) {
    SeededRng rng(seed, static_cast<std::uint64_t>(t));
    DensityMatrix rho = DensityMatrix::random(d, rng);
    DensityMatrix sigma = DensityMatrix::random(d, rng);
    double td = trace_distance(rho, sigma);
    double f = fidelity(rho, sigma);
    double db = bures_distance(rho, sigma);
    double aff = affinity(rho, sigma);
    const double slack = 1e-8;
    bool fvg = 1.0 - f <= td + slack && td <= std::sqrt(std::max(0.0, 1.0 - f * f)) + slack;
    bool bsw = 0.5 * db * db <= td + slack && td <= db + slack;
    bool asw = f * f <= aff + slack && aff <= f + slack;
    csv.row({std::to_string(t), fmt(td), fmt(f), fmt(db), fmt(aff),
             std::to_string(fvg), std::to_string(bsw), std::to_string(asw)});
  }
  return 0;
}

int cmd_jordan(int d, int r, std::uint64_t seed, const std::string& out_path,
               std::ostream& out) {
  SeededRng rng(seed);
  Projector p = haar_projector(d, r, rng);
  Projector q = haar_projector(d, r, rng);
  JordanDecomposition dec = jordan_decompose(p, q);
  BlockwiseMetrics m = blockwise_metrics(dec);
  CsvWriter csv(out, out_path);
  csv.row({"block", "omega", "trace_distance", "fidelity", "affinity"});
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    csv.row({std::to_string(i), fmt(dec.blocks[i].omega),
             i == 0 ? fmt(m.trace_distance) : "",
             i == 0 ? fmt(m.fidelity) : "", i == 0 ? fmt(m.affinity) : ""});
  }
  return 0;
}

int cmd_wss(int n, int r, int d, const std::string& spectrum_text,
            const std::string& out_path, std::ostream& out) {
  Spectrum spectrum = [&] {
    if (!spectrum_text.empty()) {
      std::vector<Rational> alpha;
      std::stringstream ss(spectrum_text);
      std::string item;
      while (std::getline(ss, item, ',')) alpha.push_back(parse_rational(item));
      return Spectrum(std::move(alpha));
    }
    return Spectrum::uniform(r, d);
  }();
  WssDistribution dist = wss_distribution(n, spectrum);
  CsvWriter csv(out, out_path);
  csv.row({"partition", "prob_num", "prob_den", "prob_float"});
  for (const auto& [lambda, prob] : dist.table) {
    csv.row({lambda.to_string(), numerator(prob).str(), denominator(prob).str(),
             fmt(to_double(prob))});
  }
  return 0;
}

int cmd_threshold(int d, int r, const std::string& eps_text,
                  const std::string& out_path, std::ostream& out) {
  Rational eps = parse_rational(eps_text);
  CsvWriter csv(out, out_path);
  csv.row({"kind", "d", "r", "epsilon", "k", "copies_lower_bound", "float"});
  if (r > 0) {
    Rational v = projector_threshold(d, r, eps);
    csv.row({"projector", std::to_string(d), std::to_string(r), fmt(eps),
             std::to_string(choose_k(eps)), fmt(v), fmt(to_double(v))});
  } else {
    Rational v = pure_threshold(d, eps);
    csv.row({"pure", std::to_string(d), "1", fmt(eps),
             std::to_string(choose_k(eps)), fmt(v), fmt(to_double(v))});
  }
  return 0;
}

int cmd_pgm_affinity(int n, int d, int r, bool grid, const std::string& out_path,
                     std::ostream& out) {
  CsvWriter csv(out, out_path);
  csv.row({"n", "d", "r", "affinity", "affinity_float", "bound", "pass"});
  auto emit = [&](int nn, int dd, int rr) {
    AffinityBoundCheck check = pgm_affinity_bound_check(nn, dd, rr);
    csv.row({std::to_string(nn), std::to_string(dd), std::to_string(rr),
             fmt(check.value), fmt(to_double(check.value)), fmt(check.bound),
             std::to_string(check.pass)});
  };
  if (grid) {
    for (int nn = 1; nn <= n; ++nn)
      for (int dd = 1; dd <= d; ++dd)
        for (int rr = 1; rr <= std::min(dd, r); ++rr) emit(nn, dd, rr);
  } else {
    emit(n, d, r);
  }
  return 0;
}

int cmd_hayashi(int n, int d, int samples, int kmax, std::uint64_t seed,
                const std::string& out_path, std::ostream& out) {
  SeededRng rng(seed);
  PureState u = haar_pure_state(d, rng);
  std::vector<double> overlaps(samples);
  for (int i = 0; i < samples; ++i) {
    PureState estimate = hayashi_sample(u, n, rng);
    overlaps[i] = std::norm(u.vec().dot(estimate.vec()));
  }
  CsvWriter csv(out, out_path);
  csv.row({"k", "empirical_moment", "std_error", "bound", "within_3se"});
  for (int k = 1; k <= kmax; ++k) {
    double mean = 0.0, sq = 0.0;
    for (double t : overlaps) {
      double tk = std::pow(t, k);
      mean += tk;
      sq += tk * tk;
    }
    mean /= samples;
    double var = std::max(0.0, sq / samples - mean * mean);
    double se = std::sqrt(var / samples);
    double bound = to_double(pure_moment_bound(n, d, k));
    csv.row({std::to_string(k), fmt(mean), fmt(se), fmt(bound),
             std::to_string(mean <= bound + 3 * se)});
  }
  return 0;
}

int cmd_bootstrap(const BootstrapConfig& base, int trials, std::uint64_t seed,
                  const std::string& out_path, std::ostream& out) {
  CsvWriter csv(out, out_path);
  csv.row({"trial", "learner_td_1", "learner_td_2", "rank_r", "tr_r_rho",
           "rank_a1", "rank_b1", "rank_a2", "rank_b2", "robust_cover",
           "lift_min_overlap", "copies_used", "survivors", "oracle_required",
           "survived_enough", "final_bures_error"});
  for (int t = 0; t < trials; ++t) {
    SeededRng rng(seed, static_cast<std::uint64_t>(t));
    Projector p = haar_projector(base.d, base.r, rng);
    BootstrapTrace trace = run_bootstrap(base, p, rng);
    csv.row({std::to_string(t), fmt(trace.learner_td_1), fmt(trace.learner_td_2),
             std::to_string(trace.r_span.rank()), fmt(trace.tr_r_rho),
             std::to_string(trace.a1.rank()), std::to_string(trace.b1.rank()),
             std::to_string(trace.a2.rank()), std::to_string(trace.b2.rank()),
             std::to_string(trace.robust_cover), fmt(trace.lift_min_overlap),
             std::to_string(trace.copies_used), std::to_string(trace.survivors),
             std::to_string(trace.oracle_required),
             std::to_string(trace.survived_enough), fmt(trace.final_bures_error)});
  }
  return 0;
}

int cmd_covering(int d, int r, double epsilon, double alpha, int trials,
                 std::uint64_t seed, const std::string& learner_name,
                 const std::string& out_path, std::ostream& out) {
  SeededRng rng(seed);
  std::vector<CoveringRecord> records = covering_experiment(
      d, r, epsilon, alpha, trials, rng, parse_learner(learner_name, epsilon).kind);
  CsvWriter csv(out, out_path);
  csv.row({"trial", "rank_b1", "rank_b2", "full_rank", "max_block_overlap",
           "robust_cover", "min_sampled_b2"});
  for (const CoveringRecord& rec : records) {
    csv.row({std::to_string(rec.trial), std::to_string(rec.rank_b1),
             std::to_string(rec.rank_b2), std::to_string(rec.full_rank),
             fmt(rec.max_block_overlap), std::to_string(rec.robust_cover),
             fmt(rec.min_sampled_b2)});
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"projector tomography toolkit"};
  app.require_subcommand(1);

  int d = 2, r = 0, n = 1, trials = 100, samples = 10000, kmax = 4;
  std::uint64_t seed = 0;
  std::string out_path, spectrum_text, eps_text, learner_name = "adversarial";
  std::string oracle_name = "exact";
  double epsilon = 0.1, alpha = 0.2, budget_c = 16.0, delta = 0.05;
  bool grid = false, fast = false;

  auto* metrics = app.add_subcommand("metrics", "random-pair metric and inequality sweep");
  metrics->add_option("--d", d, "dimension")->required();
  metrics->add_option("--trials", trials, "number of pairs")->required();
  metrics->add_option("--seed", seed, "rng seed")->required();
  metrics->add_option("--out", out_path, "output CSV path");

  auto* jordan = app.add_subcommand("jordan", "Jordan block report for a seeded pair");
  jordan->add_option("--d", d)->required();
  jordan->add_option("--r", r)->required();
  jordan->add_option("--seed", seed)->required();
  jordan->add_option("--out", out_path);

  auto* wss = app.add_subcommand("wss", "exact weak Schur sampling distribution");
  wss->add_option("--n", n, "number of copies")->required();
  wss->add_option("--r", r, "rank of the uniform spectrum");
  wss->add_option("--d", d, "dimension");
  wss->add_option("--spectrum", spectrum_text, "comma-separated rational spectrum");
  wss->add_option("--out", out_path);

  auto* threshold = app.add_subcommand("threshold", "sample-complexity lower bounds");
  threshold->add_option("--d", d)->required();
  threshold->add_option("--r", r, "rank (omit for the pure-state bound)");
  threshold->add_option("--epsilon", eps_text, "target error, exact decimal or p/q")
      ->required();
  threshold->add_option("--out", out_path);

  auto* pgm = app.add_subcommand("pgm-affinity", "exact PGM expected affinity");
  pgm->add_option("--n", n)->required();
  pgm->add_option("--d", d)->required();
  pgm->add_option("--r", r)->required();
  pgm->add_flag("--grid", grid, "sweep all n' <= n, d' <= d, r' <= min(d', r)");
  pgm->add_option("--out", out_path);

  auto* hayashi = app.add_subcommand("hayashi", "empirical Hayashi moments vs bounds");
  hayashi->add_option("--n", n)->required();
  hayashi->add_option("--d", d)->required();
  hayashi->add_option("--samples", samples)->required();
  hayashi->add_option("--seed", seed)->required();
  hayashi->add_option("--kmax", kmax);
  hayashi->add_option("--out", out_path);

  auto* bootstrap = app.add_subcommand("bootstrap", "bootstrapped algorithm trials");
  bootstrap->add_option("--d", d)->required();
  bootstrap->add_option("--r", r)->required();
  bootstrap->add_option("--epsilon", epsilon)->required();
  bootstrap->add_option("--alpha", alpha);
  bootstrap->add_option("--trials", trials)->required();
  bootstrap->add_option("--seed", seed)->required();
  bootstrap->add_option("--learner", learner_name, "exact|adversarial|tilt");
  bootstrap->add_option("--c", budget_c, "copy budget constant");
  bootstrap->add_option("--oracle", oracle_name, "exact|noisy");
  bootstrap->add_option("--delta", delta, "noisy oracle Bures error");
  bootstrap->add_option("--out", out_path);

  auto* covering = app.add_subcommand("covering", "robust covering experiment");
  covering->add_option("--d", d)->required();
  covering->add_option("--r", r)->required();
  covering->add_option("--epsilon", epsilon)->required();
  covering->add_option("--alpha", alpha);
  covering->add_option("--trials", trials)->required();
  covering->add_option("--seed", seed)->required();
  covering->add_option("--learner", learner_name, "exact|adversarial|tilt");
  covering->add_option("--out", out_path);

  auto* self = app.add_subcommand("selftest", "run the invariant suite");
  self->add_flag("--fast", fast, "reduced trial counts");

  std::vector<const char*> argv;
  argv.push_back("ptomo");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (metrics->parsed()) return cmd_metrics(d, trials, seed, out_path, out);
    if (jordan->parsed()) return cmd_jordan(d, r, seed, out_path, out);
    if (wss->parsed()) {
      if (spectrum_text.empty() && r < 1)
        throw domain_error("wss: provide --r/--d or --spectrum");
      if (spectrum_text.empty() && d < r) d = r;
      return cmd_wss(n, r, d, spectrum_text, out_path, out);
    }
    if (threshold->parsed()) return cmd_threshold(d, r, eps_text, out_path, out);
    if (pgm->parsed()) return cmd_pgm_affinity(n, d, r, grid, out_path, out);
    if (hayashi->parsed())
      return cmd_hayashi(n, d, samples, kmax, seed, out_path, out);
    if (bootstrap->parsed()) {
      BootstrapConfig cfg;
      cfg.d = d;
      cfg.r = r;
      cfg.epsilon = epsilon;
      cfg.alpha = alpha;
      cfg.learner = parse_learner(learner_name, epsilon);
      cfg.budget_constant = budget_c;
      if (oracle_name == "noisy") {
        cfg.oracle = BuresOracleKind::kNoisy;
        cfg.oracle_delta = delta;
      } else if (oracle_name != "exact") {
        throw domain_error("unknown oracle '" + oracle_name + "' (exact|noisy)");
      }
      return cmd_bootstrap(cfg, trials, seed, out_path, out);
    }
    if (covering->parsed())
      return cmd_covering(d, r, epsilon, alpha, trials, seed, learner_name,
                          out_path, out);
    if (self->parsed()) return selftest(fast, out) ? 0 : 3;
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace ptomo::cli
