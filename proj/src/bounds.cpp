#include "ptomo/bounds.hpp"

#include <cmath>

namespace ptomo {

void MomentBoundParams::validate() const {
  if (n < 0 || d < 1 || r < 0 || k < 0 || lambda1 < 0)
    throw domain_error("MomentBoundParams: negative parameter");
  if (r > d) throw domain_error("MomentBoundParams: r > d");
}

Rational pure_moment_bound(int n, int d, int k) {
  if (n < 0 || d < 1 || k < 0) throw domain_error("pure_moment_bound: bad parameters");
  return Rational(binomial(d + n - 1, n), binomial(d + n + k - 1, n + k));
}

double pure_moment_bound_loose(int n, int d, int k) {
  if (n < 0 || d < 1 || k < 0)
    throw domain_error("pure_moment_bound_loose: bad parameters");
  if (k == 0) return 1.0;
  return std::pow(static_cast<double>(n + k) / (d + n + k - 1), k);
}

Rational projector_affinity_moment_bound(int lambda1, int n, int d, int r, int k) {
  MomentBoundParams{n, d, r, k, lambda1}.validate();
  Rational product = 1;
  for (int i = 1; i <= k; ++i)
    product *= Rational(r + lambda1 + i - 1, d + lambda1 + i - 1);
  return product;
}

double projector_affinity_moment_bound_loose(int lambda1, int d, int r, int k) {
  MomentBoundParams{0, d, r, k, lambda1}.validate();
  if (k == 0) return 1.0;
  return std::pow(static_cast<double>(r + lambda1 + k - 1) / (d + lambda1 + k - 1), k);
}

std::int64_t choose_k(double epsilon) {
  if (epsilon <= 0) throw domain_error("choose_k: epsilon must be positive");
  return static_cast<std::int64_t>(std::floor(1.0 / (16.0 * epsilon * epsilon)));
}

std::int64_t choose_k(const Rational& epsilon) {
  if (epsilon <= 0) throw domain_error("choose_k: epsilon must be positive");
  // floor(q^2 / (16 p^2)) for epsilon = p/q, by integer division.
  BigInt p = numerator(epsilon), q = denominator(epsilon);
  BigInt k = (q * q) / (16 * p * p);
  return k.convert_to<std::int64_t>();
}

Rational pure_threshold(int d, const Rational& epsilon) {
  if (d < 2) throw validity_error("pure_threshold: requires d >= 2");
  if (epsilon <= 0) throw validity_error("pure_threshold: requires epsilon > 0");
  // epsilon <= 1/sqrt(48) compared exactly as epsilon^2 <= 1/48.
  if (epsilon * epsilon > Rational(1, 48))
    throw validity_error("pure_threshold: requires epsilon <= 1/sqrt(48)");
  return Rational(d) / (64 * epsilon * epsilon);
}

double pure_threshold(int d, double epsilon) {
  if (d < 2) throw validity_error("pure_threshold: requires d >= 2");
  if (epsilon <= 0) throw validity_error("pure_threshold: requires epsilon > 0");
  // Tiny relative slack so the exact boundary 1/sqrt(48) is accepted.
  if (epsilon * epsilon > (1.0 / 48.0) * (1.0 + 1e-12))
    throw validity_error("pure_threshold: requires epsilon <= 1/sqrt(48)");
  return d / (64.0 * epsilon * epsilon);
}

Rational projector_threshold(int d, int r, const Rational& epsilon) {
  if (d < 2) throw validity_error("projector_threshold: requires d >= 2");
  if (2 * r > d) throw validity_error("projector_threshold: requires r <= d/2");
  if (r < 1) throw validity_error("projector_threshold: requires r >= 1");
  if (epsilon <= 0 || epsilon > Rational(1, 80))
    throw validity_error("projector_threshold: requires 0 < epsilon <= 1/80");
  return Rational(static_cast<long>(r) * d) / (128 * epsilon * epsilon);
}

double projector_threshold(int d, int r, double epsilon) {
  if (d < 2) throw validity_error("projector_threshold: requires d >= 2");
  if (2 * r > d) throw validity_error("projector_threshold: requires r <= d/2");
  if (r < 1) throw validity_error("projector_threshold: requires r >= 1");
  if (epsilon <= 0 || epsilon > (1.0 / 80.0) * (1.0 + 1e-12))
    throw validity_error("projector_threshold: requires 0 < epsilon <= 1/80");
  return static_cast<double>(r) * d / (128.0 * epsilon * epsilon);
}

}  // namespace ptomo
