#include "ptomo/schur_weyl.hpp"

#include <algorithm>
#include <numeric>

#include "ptomo/rep_theory.hpp"

namespace ptomo {

Partition cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

namespace {

// Murnaghan-Nakayama on beta-numbers: removing a border strip of length t
// moves one beta down by t; the sign counts the betas jumped over.
BigInt mn_character(std::vector<int> betas, std::vector<int> cycles) {
  if (cycles.empty()) return 1;
  int t = cycles.back();
  cycles.pop_back();
  BigInt total = 0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    int target = betas[i] - t;
    if (target < 0) continue;
    if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
    int jumped = 0;
    for (int b : betas)
      if (b > target && b < betas[i]) ++jumped;
    std::vector<int> next = betas;
    next[i] = target;
    BigInt sub = mn_character(std::move(next), cycles);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

BigInt sn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw domain_error("sn_character: |lambda| != |mu|");
  if (lambda.size() == 0) return 1;
  const int rows = lambda.length();
  std::vector<int> betas(rows);
  for (int i = 1; i <= rows; ++i) betas[i - 1] = lambda.row(i) + (rows - i);
  std::vector<int> cycles = mu.parts();
  return mn_character(std::move(betas), std::move(cycles));
}

std::int64_t dense_dimension(int n, int d, std::int64_t size_limit) {
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= d;
    if (total > size_limit)
      throw capacity_error("dense Schur-Weyl path: d^n exceeds the size limit");
  }
  return total;
}

ComplexMatrix permutation_operator(const std::vector<int>& perm, int d) {
  const int n = static_cast<int>(perm.size());
  const std::int64_t dim = dense_dimension(n, d, 1 << 20);
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[perm[i]] = i;

  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  std::vector<int> word(n), permuted(n);
  for (std::int64_t x = 0; x < dim; ++x) {
    std::int64_t rem = x;
    for (int pos = n - 1; pos >= 0; --pos) {
      word[pos] = static_cast<int>(rem % d);
      rem /= d;
    }
    for (int pos = 0; pos < n; ++pos) permuted[pos] = word[inverse[pos]];
    std::int64_t y = 0;
    for (int pos = 0; pos < n; ++pos) y = y * d + permuted[pos];
    p(y, x) = 1.0;
  }
  return p;
}

ComplexMatrix tensor_power(const ComplexMatrix& m, int n) {
  if (n < 1) throw domain_error("tensor_power: n must be positive");
  ComplexMatrix result = m;
  for (int step = 1; step < n; ++step) {
    ComplexMatrix next(result.rows() * m.rows(), result.cols() * m.cols());
    for (Eigen::Index i = 0; i < result.rows(); ++i)
      for (Eigen::Index j = 0; j < result.cols(); ++j)
        next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) =
            result(i, j) * m;
    result = std::move(next);
  }
  return result;
}

ComplexMatrix isotypic_projector(const Partition& lambda, int n, int d,
                                 std::int64_t size_limit) {
  if (lambda.size() != n) throw domain_error("isotypic_projector: lambda must partition n");
  const std::int64_t dim = dense_dimension(n, d, size_limit);
  const double scale =
      num_syt(lambda).convert_to<double>() / factorial(n).convert_to<double>();

  ComplexMatrix proj = ComplexMatrix::Zero(dim, dim);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    double chi = sn_character(lambda, cycle_type(perm)).convert_to<double>();
    if (chi != 0.0) proj += (scale * chi) * permutation_operator(perm, d);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return proj;
}

}  // namespace ptomo
