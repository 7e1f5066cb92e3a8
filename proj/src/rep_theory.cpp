#include "ptomo/rep_theory.hpp"

#include <algorithm>

namespace ptomo {

BigInt num_syt(const Partition& lambda) {
  BigInt hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) hooks *= hook_length(lambda, i, j);
  return factorial(lambda.size()) / hooks;  // exact division
}

BigInt num_ssyt(const Partition& lambda, int r) {
  if (r < 0) throw domain_error("num_ssyt: negative alphabet size");
  if (lambda.length() > r) return 0;
  BigInt num = 1, den = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) {
      num *= r + cell_content(i, j);
      den *= hook_length(lambda, i, j);
    }
  }
  return num / den;  // hook-content products divide exactly
}

namespace {

// Uniform spectrum: all nonzero entries equal. Schur polynomials are
// symmetric, so the order of entries does not matter.
template <typename Scalar>
bool uniform_value(const std::vector<Scalar>& x, Scalar* value, int* support) {
  Scalar v{};
  int count = 0;
  for (const Scalar& xi : x) {
    if (xi == Scalar{}) continue;
    if (count == 0)
      v = xi;
    else if (!(xi == v))
      return false;
    ++count;
  }
  *value = v;
  *support = count;
  return true;
}

template <typename Scalar>
Scalar pow_scalar(const Scalar& base, int exp) {
  Scalar p{1};
  for (int i = 0; i < exp; ++i) p = p * base;
  return p;
}

template <typename Scalar>
Scalar from_bigint(const BigInt& v);

template <>
Rational from_bigint<Rational>(const BigInt& v) {
  return Rational(v);
}

template <>
double from_bigint<double>(const BigInt& v) {
  return v.convert_to<double>();
}

// Sum of x^T over SSYT of shape lambda, by row-major backtracking.
template <typename Scalar>
Scalar ssyt_sum(const Partition& lambda, const std::vector<Scalar>& x) {
  const int d = static_cast<int>(x.size());
  const int rows = lambda.length();
  if (rows > d) return Scalar{};
  std::vector<std::vector<int>> fill(rows);
  for (int i = 0; i < rows; ++i) fill[i].resize(lambda.row(i + 1));

  Scalar total{};
  auto recurse = [&](auto&& self, int i, int j, Scalar monomial) -> void {
    if (i == rows) {
      total = total + monomial;
      return;
    }
    int next_i = i, next_j = j + 1;
    if (next_j >= lambda.row(i + 1)) {
      next_i = i + 1;
      next_j = 0;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, fill[i][j - 1]);                // weakly right
    if (i > 0 && j < lambda.row(i)) lo = std::max(lo, fill[i - 1][j] + 1);  // strictly down
    for (int entry = lo; entry <= d; ++entry) {
      if (x[entry - 1] == Scalar{}) continue;  // zero variable kills the monomial
      fill[i][j] = entry;
      self(self, next_i, next_j, monomial * x[entry - 1]);
    }
  };
  recurse(recurse, 0, 0, Scalar{1});
  return total;
}

template <typename Scalar>
Scalar schur_eval_impl(const Partition& lambda, const std::vector<Scalar>& x,
                       int limit) {
  if (lambda.size() == 0) return Scalar{1};
  if (lambda.length() > static_cast<int>(x.size())) return Scalar{};
  Scalar value{};
  int support = 0;
  if (uniform_value(x, &value, &support))
    return pow_scalar(value, lambda.size()) *
           from_bigint<Scalar>(num_ssyt(lambda, support));
  if (lambda.size() > limit)
    throw capacity_error("schur_eval: |lambda| exceeds the enumeration limit");
  return ssyt_sum(lambda, x);
}

}  // namespace

Rational schur_eval(const Partition& lambda, const std::vector<Rational>& x,
                    int limit) {
  return schur_eval_impl(lambda, x, limit);
}

double schur_eval(const Partition& lambda, const std::vector<double>& x,
                  int limit) {
  return schur_eval_impl(lambda, x, limit);
}

std::vector<Partition> pieri_expand(const Partition& lambda, int d) {
  if (lambda.length() > d) throw domain_error("pieri_expand: length(lambda) > d");
  std::vector<Partition> out;
  for (int i = 1; i <= std::min(lambda.length() + 1, d); ++i) {
    if (i == 1 || lambda.row(i - 1) > lambda.row(i)) out.push_back(lambda.add_box(i));
  }
  return out;
}

bool lr_admissible(const Partition& lambda, const Partition& mu,
                   const Partition& tau, int d) {
  return lambda.size() + mu.size() == tau.size() && tau.contains(lambda) &&
         tau.contains(mu) && tau.length() <= d;
}

Rational content_ratio_product(const Partition& lambda, const Partition& tau,
                               int r, int d) {
  if (!tau.contains(lambda))
    throw domain_error("content_ratio_product: lambda not contained in tau");
  Rational product = 1;
  for (int i = 1; i <= tau.length(); ++i) {
    for (int j = lambda.row(i) + 1; j <= tau.row(i); ++j) {
      int c = cell_content(i, j);
      if (d + c == 0)
        throw domain_error("content_ratio_product: zero denominator factor");
      product *= Rational(r + c, d + c);
    }
  }
  return product;
}

Rational haar_irrep_scalar(const Partition& lambda, int r, int d) {
  if (lambda.length() > d)
    throw domain_error("haar_irrep_scalar: s_lambda(1^d) = 0 for length > d");
  return content_ratio_product(Partition(), lambda, r, d);
}

}  // namespace ptomo
