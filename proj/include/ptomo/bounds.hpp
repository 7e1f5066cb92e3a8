// bounds.hpp
// Closed-form moment bounds and sample-complexity thresholds, as exact
// calculators. Thresholds carry their validity windows and reject
// parameters outside them rather than extrapolating.

#pragma once

#include <cstdint>

#include "ptomo/rational.hpp"

namespace ptomo {

// Parameter carrier for the moment-bound calculators.
struct MomentBoundParams {
  int n = 0;
  int d = 1;
  int r = 1;
  int k = 0;
  int lambda1 = 0;

  void validate() const;
};

// C(d+n-1, n) / C(d+n+k-1, n+k) = (n+1)...(n+k) / ((n+d)...(n+d+k-1)).
Rational pure_moment_bound(int n, int d, int k);

// The ((n+k)/(d+n+k-1))^k relaxation; always >= the exact bound.
double pure_moment_bound_loose(int n, int d, int k);

// prod_{i=1..k} (r + lambda1 + i - 1) / (d + lambda1 + i - 1), exact.
Rational projector_affinity_moment_bound(int lambda1, int n, int d, int r, int k);

// The ((r+lambda1+k-1)/(d+lambda1+k-1))^k relaxation.
double projector_affinity_moment_bound_loose(int lambda1, int d, int r, int k);

// k = floor(1 / (16 eps^2)). Returns 0 for eps > 1/4 and 1 at eps = 1/4.
std::int64_t choose_k(double epsilon);
std::int64_t choose_k(const Rational& epsilon);

// d / (64 eps^2); valid for d >= 2 and 0 < eps <= 1/sqrt(48).
Rational pure_threshold(int d, const Rational& epsilon);
double pure_threshold(int d, double epsilon);

// r d / (128 eps^2); valid for d >= 2, r <= d/2, 0 < eps <= 1/80.
Rational projector_threshold(int d, int r, const Rational& epsilon);
double projector_threshold(int d, int r, double epsilon);

}  // namespace ptomo
