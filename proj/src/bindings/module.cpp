// Python bindings for the main operations: distance measures, Haar
// sampling, Jordan decomposition, tableau combinatorics, weak Schur
// sampling, moment bounds, the PGM closed form, and bootstrap trials.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptomo/bootstrap.hpp"
#include "ptomo/bounds.hpp"
#include "ptomo/core.hpp"
#include "ptomo/jordan.hpp"
#include "ptomo/pgm.hpp"
#include "ptomo/rep_theory.hpp"
#include "ptomo/schur_weyl.hpp"
#include "ptomo/wss.hpp"

namespace py = pybind11;
using namespace ptomo;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(to_string(q));
}

py::object to_py_int(const BigInt& v) {
  static py::object int_type = py::module_::import("builtins").attr("int");
  return int_type(v.str());
}

Rational from_py_rational(const py::object& obj) {
  if (py::isinstance<py::int_>(obj))
    return Rational(BigInt(py::str(obj).cast<std::string>()));
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    BigInt num(py::str(obj.attr("numerator")).cast<std::string>());
    BigInt den(py::str(obj.attr("denominator")).cast<std::string>());
    return Rational(num, den);
  }
  return parse_rational(py::str(obj).cast<std::string>());
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

DensityMatrix to_density(const ComplexMatrix& m) { return DensityMatrix(m); }

// A dense matrix is accepted wherever a projector is expected; the frame
// is recovered from its column span.
Projector to_projector(const ComplexMatrix& m) { return Projector::onto_span(m); }

LearnerSpec learner_from_name(const std::string& name, double epsilon) {
  if (name == "exact") return {LearnerKind::kExactOracle, epsilon, {}};
  if (name == "adversarial") return {LearnerKind::kAdversarialDiscard, epsilon, {}};
  if (name == "tilt") return {LearnerKind::kUniformTilt, epsilon, {}};
  throw domain_error("unknown learner '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rank-r projector tomography toolkit";

  py::register_exception<capacity_error>(m, "CapacityError");

  // --- states and distance measures -------------------------------------
  m.def(
      "haar_unitary",
      [](int d, std::uint64_t seed, std::uint64_t stream) {
        SeededRng rng(seed, stream);
        return haar_unitary(d, rng);
      },
      py::arg("d"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "haar_projector",
      [](int d, int r, std::uint64_t seed, std::uint64_t stream) {
        SeededRng rng(seed, stream);
        return haar_projector(d, r, rng).matrix();
      },
      py::arg("d"), py::arg("r"), py::arg("seed"), py::arg("stream") = 0);
  m.def("trace_distance", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return trace_distance(to_density(a), to_density(b));
  });
  m.def("fidelity", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return fidelity(to_density(a), to_density(b));
  });
  m.def("bures_distance", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return bures_distance(to_density(a), to_density(b));
  });
  m.def("affinity", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return affinity(to_density(a), to_density(b));
  });
  m.def(
      "round_to_projector_state",
      [](const ComplexMatrix& rho_hat, int r) {
        return round_to_projector_state(to_density(rho_hat), r).matrix();
      },
      py::arg("rho_hat"), py::arg("r"));
  m.def(
      "restrict_to_subspace",
      [](const ComplexMatrix& rho, const ComplexMatrix& r_proj) {
        Restriction res = restrict_to_subspace(to_density(rho), to_projector(r_proj));
        return py::make_tuple(res.state.mat(), res.weight);
      },
      py::arg("rho"), py::arg("r_proj"));
  m.def("sym_dimension",
        [](int n, int d) { return to_py_int(sym_dimension(n, d)); });
  m.def("sym_projector", &sym_projector, py::arg("n"), py::arg("d"),
        py::arg("size_limit") = 4096);

  // --- Jordan machinery ---------------------------------------------------
  m.def(
      "jordan_overlaps",
      [](const ComplexMatrix& p, const ComplexMatrix& q) {
        JordanDecomposition dec = jordan_decompose(to_projector(p), to_projector(q));
        std::vector<double> omegas;
        for (const JordanBlock& b : dec.blocks) omegas.push_back(b.omega);
        return omegas;
      },
      "Jordan overlaps omega_i of an equal-rank projector pair");
  m.def("jordan_metrics", [](const ComplexMatrix& p, const ComplexMatrix& q) {
    BlockwiseMetrics bm =
        blockwise_metrics(jordan_decompose(to_projector(p), to_projector(q)));
    return py::make_tuple(bm.trace_distance, bm.fidelity, bm.affinity);
  });
  m.def(
      "align_projector",
      [](const ComplexMatrix& p1, const ComplexMatrix& p2, double threshold) {
        return align_projector(to_projector(p1), to_projector(p2), threshold).matrix();
      },
      py::arg("p1"), py::arg("p2"), py::arg("threshold"));
  m.def("robust_cover_check",
        [](const ComplexMatrix& p1, const ComplexMatrix& p2, const ComplexMatrix& p) {
          return robust_cover_check(to_projector(p1), to_projector(p2), to_projector(p));
        });
  m.def("span_projector", [](const ComplexMatrix& p1, const ComplexMatrix& p2) {
    return span_projector(to_projector(p1), to_projector(p2)).matrix();
  });

  // --- exact combinatorics --------------------------------------------------
  m.def("partitions_of", [](int n, int max_len) {
    std::vector<std::vector<int>> out;
    for (const Partition& p : partitions_of(n, max_len)) out.push_back(p.parts());
    return out;
  });
  m.def("num_syt",
        [](const std::vector<int>& parts) { return to_py_int(num_syt(to_partition(parts))); });
  m.def("num_ssyt", [](const std::vector<int>& parts, int r) {
    return to_py_int(num_ssyt(to_partition(parts), r));
  });
  m.def(
      "schur_eval",
      [](const std::vector<int>& parts, const py::list& x) {
        std::vector<Rational> values;
        for (const auto& item : x) values.push_back(from_py_rational(py::reinterpret_borrow<py::object>(item)));
        return to_fraction(schur_eval(to_partition(parts), values));
      },
      "exact Schur polynomial at a rational point");
  m.def("hook_length", [](const std::vector<int>& parts, int i, int j) {
    return hook_length(to_partition(parts), i, j);
  });
  m.def("cell_content", &cell_content);
  m.def("pieri_expand", [](const std::vector<int>& parts, int d) {
    std::vector<std::vector<int>> out;
    for (const Partition& p : pieri_expand(to_partition(parts), d)) out.push_back(p.parts());
    return out;
  });
  m.def("lr_admissible", [](const std::vector<int>& l, const std::vector<int>& mu,
                            const std::vector<int>& tau, int d) {
    return lr_admissible(to_partition(l), to_partition(mu), to_partition(tau), d);
  });
  m.def("content_ratio_product",
        [](const std::vector<int>& l, const std::vector<int>& tau, int r, int d) {
          return to_fraction(content_ratio_product(to_partition(l), to_partition(tau), r, d));
        });
  m.def("haar_irrep_scalar", [](const std::vector<int>& l, int r, int d) {
    return to_fraction(haar_irrep_scalar(to_partition(l), r, d));
  });

  // --- weak Schur sampling ---------------------------------------------------
  m.def(
      "wss_distribution",
      [](int n, int r, int d) {
        WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, d));
        py::list out;
        for (const auto& [lambda, prob] : dist.table)
          out.append(py::make_tuple(py::tuple(py::cast(lambda.parts())), to_fraction(prob)));
        return out;
      },
      py::arg("n"), py::arg("r"), py::arg("d"));
  m.def(
      "wss_sample",
      [](int n, int r, int d, std::uint64_t seed, int count) {
        WssDistribution dist = wss_distribution(n, Spectrum::uniform(r, d));
        SeededRng rng(seed);
        std::vector<std::vector<int>> out;
        for (int i = 0; i < count; ++i) out.push_back(wss_sample(dist, rng).parts());
        return out;
      },
      py::arg("n"), py::arg("r"), py::arg("d"), py::arg("seed"), py::arg("count") = 1);

  // --- bounds and thresholds --------------------------------------------------
  m.def("pure_moment_bound",
        [](int n, int d, int k) { return to_fraction(pure_moment_bound(n, d, k)); });
  m.def("pure_moment_bound_loose", &pure_moment_bound_loose);
  m.def("projector_affinity_moment_bound", [](int lambda1, int n, int d, int r, int k) {
    return to_fraction(projector_affinity_moment_bound(lambda1, n, d, r, k));
  });
  m.def("choose_k", [](const py::object& eps) {
    return choose_k(from_py_rational(eps));
  });
  m.def("pure_threshold", [](int d, const py::object& eps) {
    return to_fraction(pure_threshold(d, from_py_rational(eps)));
  });
  m.def("projector_threshold", [](int d, int r, const py::object& eps) {
    return to_fraction(projector_threshold(d, r, from_py_rational(eps)));
  });

  // --- the pretty good measurement ----------------------------------------------
  m.def("pgm_expected_affinity", [](int n, int d, int r) {
    return to_fraction(pgm_expected_affinity(n, d, r));
  });
  m.def("pgm_affinity_bound_check", [](int n, int d, int r) {
    AffinityBoundCheck c = pgm_affinity_bound_check(n, d, r);
    return py::make_tuple(to_fraction(c.value), to_fraction(c.bound), c.pass);
  });
  m.def(
      "hayashi_overlaps",
      [](int n, int d, int samples, std::uint64_t seed) {
        SeededRng rng(seed);
        PureState u = haar_pure_state(d, rng);
        std::vector<double> out(samples);
        for (int i = 0; i < samples; ++i)
          out[i] = std::norm(u.vec().dot(hayashi_sample(u, n, rng).vec()));
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("samples"), py::arg("seed"),
      "squared overlaps |<u|u_hat>|^2 of Hayashi-measurement estimates");
  m.def(
      "pgm_dense_simulate",
      [](const ComplexMatrix& p, int n, std::uint64_t seed, std::uint64_t stream) {
        SeededRng rng(seed, stream);
        return pgm_dense_simulate(to_projector(p), n, rng).matrix();
      },
      py::arg("p"), py::arg("n"), py::arg("seed"), py::arg("stream") = 0);

  // --- bootstrap -------------------------------------------------------------
  m.def(
      "bootstrap_trial",
      [](int d, int r, double epsilon, double alpha, const std::string& learner,
         std::uint64_t seed, std::uint64_t stream) {
        BootstrapConfig cfg;
        cfg.d = d;
        cfg.r = r;
        cfg.epsilon = epsilon;
        cfg.alpha = alpha;
        cfg.learner = learner_from_name(learner, epsilon);
        SeededRng rng(seed, stream);
        Projector p = haar_projector(d, r, rng);
        BootstrapTrace t = run_bootstrap(cfg, p, rng);
        py::dict out;
        out["tr_r_rho"] = t.tr_r_rho;
        out["rank_r"] = t.r_span.rank();
        out["robust_cover"] = t.robust_cover;
        out["lift_min_overlap"] = t.lift_min_overlap;
        out["survivors"] = t.survivors;
        out["survived_enough"] = t.survived_enough;
        out["final_bures_error"] = t.final_bures_error;
        return out;
      },
      py::arg("d"), py::arg("r"), py::arg("epsilon"), py::arg("alpha"),
      py::arg("learner"), py::arg("seed"), py::arg("stream") = 0);
}
