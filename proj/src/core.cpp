#include "ptomo/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ptomo {

ComplexMatrix haar_unitary(int d, SeededRng& rng) {
  if (d < 1) throw domain_error("haar_unitary: d must be positive");
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: multiply each column by the phase that makes the
  // corresponding R diagonal entry real positive (Mezzadri's recipe).
  for (int j = 0; j < d; ++j) {
    std::complex<double> rjj = r(j, j);
    double mag = std::abs(rjj);
    if (mag > 0) q.col(j) *= rjj / mag;
  }
  return q;
}

Projector haar_projector(int d, int r, SeededRng& rng) {
  if (r < 1 || r > d) throw domain_error("haar_projector: need 1 <= r <= d");
  return Projector::from_frame(haar_unitary(d, rng).leftCols(r));
}

PureState haar_pure_state(int d, SeededRng& rng) {
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return PureState::normalized(std::move(v));
}

PureState haar_pure_state_in(const Projector& support, SeededRng& rng) {
  if (support.rank() == 0)
    throw domain_error("haar_pure_state_in: empty support");
  ComplexVector coeff(support.rank());
  for (int i = 0; i < support.rank(); ++i) coeff(i) = rng.complex_normal();
  return PureState::normalized(support.frame() * coeff);
}

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b,
                      const char* what) {
  if (a.dim() != b.dim())
    throw domain_error(std::string(what) + ": dimension mismatch");
}

}  // namespace

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_distance");
  HermitianEig eig = hermitian_eig(rho.mat() - sigma.mat());
  return 0.5 * eig.values.cwiseAbs().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "fidelity");
  ComplexMatrix root = psd_sqrt(rho.mat());
  HermitianEig eig = hermitian_eig(root * sigma.mat() * root);
  double f = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double v = eig.values(i);
    if (v > kEigenvalueClipTol) f += std::sqrt(v);
  }
  return f;
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return bures_from_fidelity(fidelity(rho, sigma));
}

double affinity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "affinity");
  return (psd_sqrt(rho.mat()) * psd_sqrt(sigma.mat())).trace().real();
}

Projector round_to_projector_state(const DensityMatrix& rho_hat, int r) {
  const int d = rho_hat.dim();
  if (r < 1 || r > d) throw domain_error("round_to_projector_state: need 1 <= r <= dim");
  HermitianEig eig = hermitian_eig(rho_hat.mat());

  // Phase-fix each eigenvector (first entry of modulus > clip tolerance is
  // made real positive), then round entries so the tie-break is stable.
  ComplexMatrix vectors = eig.vectors;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      std::complex<double> x = vectors(i, j);
      if (std::abs(x) > kEigenvalueClipTol) {
        vectors.col(j) *= std::conj(x) / std::abs(x);
        break;
      }
    }
  }
  auto key = [&](int j) {
    std::vector<double> k;
    k.reserve(2 * d);
    for (int i = 0; i < d; ++i) {
      k.push_back(std::round(vectors(i, j).real() * 1e9));
      k.push_back(std::round(vectors(i, j).imag() * 1e9));
    }
    return k;
  };
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<double>> keys(d);
  for (int j = 0; j < d; ++j) keys[j] = key(j);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (eig.values(a) != eig.values(b)) return eig.values(a) > eig.values(b);
    return keys[a] < keys[b];
  });

  ComplexMatrix frame(d, r);
  for (int j = 0; j < r; ++j) frame.col(j) = vectors.col(order[j]);
  return Projector::from_frame(std::move(frame));
}

Restriction restrict_to_subspace(const DensityMatrix& rho, const Projector& r_proj) {
  if (rho.dim() != r_proj.dim())
    throw domain_error("restrict_to_subspace: dimension mismatch");
  ComplexMatrix rm = r_proj.matrix();
  double weight = (rm * rho.mat()).trace().real();
  if (weight <= 1e-12)
    throw degenerate_restriction_error(
        "restrict_to_subspace: tr(R rho) vanishes");
  ComplexMatrix restricted = rm * rho.mat() * rm / weight;
  return {DensityMatrix(hermitize(restricted)), weight};
}

BinaryMeasurement measure_binary(const DensityMatrix& rho, const Projector& r_proj,
                                 SeededRng& rng) {
  if (rho.dim() != r_proj.dim())
    throw domain_error("measure_binary: dimension mismatch");
  ComplexMatrix rm = r_proj.matrix();
  double p_in = std::clamp((rm * rho.mat()).trace().real(), 0.0, 1.0);
  if (rng.uniform() < p_in) {
    ComplexMatrix post = rm * rho.mat() * rm / p_in;
    return {MeasureOutcome::kIn, DensityMatrix(hermitize(post))};
  }
  ComplexMatrix cm = r_proj.complement().matrix();
  ComplexMatrix post = cm * rho.mat() * cm / (1.0 - p_in);
  return {MeasureOutcome::kOut, DensityMatrix(hermitize(post))};
}

BigInt sym_dimension(int n, int d) {
  if (n < 0 || d < 1) throw domain_error("sym_dimension: need n >= 0, d >= 1");
  return binomial(n + d - 1, n);
}

ComplexMatrix sym_projector(int n, int d, std::int64_t size_limit) {
  if (n < 1 || d < 1) throw domain_error("sym_projector: need n, d >= 1");
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= d;
    if (total > size_limit)
      throw capacity_error("sym_projector: d^n exceeds the dense size limit");
  }

  // Entry (x, y) of (1/n!) sum_pi P(pi) counts the permutations mapping the
  // index word of y to that of x, i.e. prod_i m_i! / n! when the two words
  // have the same letter multiset (type) and 0 otherwise.
  const auto dim = static_cast<Eigen::Index>(total);
  std::vector<std::vector<int>> type(dim, std::vector<int>(d, 0));
  for (Eigen::Index x = 0; x < dim; ++x) {
    Eigen::Index rem = x;
    for (int pos = 0; pos < n; ++pos) {
      type[x][rem % d] += 1;
      rem /= d;
    }
  }
  double inv_nfact = 1.0 / static_cast<double>(factorial(n).convert_to<double>());
  std::vector<double> fact(n + 1, 1.0);
  for (int i = 2; i <= n; ++i) fact[i] = fact[i - 1] * i;

  ComplexMatrix proj = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    double weight = inv_nfact;
    for (int c = 0; c < d; ++c) weight *= fact[type[x][c]];
    for (Eigen::Index y = x; y < dim; ++y) {
      if (type[x] == type[y]) {
        proj(x, y) = weight;
        proj(y, x) = weight;
      }
    }
  }
  return proj;
}

}  // namespace ptomo
