// rep_theory.hpp
// Exact tableau counting, Schur polynomial evaluation, Pieri expansion,
// Littlewood-Richardson admissibility, and the content-ratio products
// behind the Haar-average irrep scalar. Everything here is exact
// arbitrary-precision arithmetic.

#pragma once

#include <vector>

#include "ptomo/partition.hpp"
#include "ptomo/rational.hpp"

namespace ptomo {

inline constexpr int kDefaultSchurEnumerationLimit = 12;

// Number of standard Young tableaux of shape lambda (hook length formula).
BigInt num_syt(const Partition& lambda);

// Number of semistandard Young tableaux with entries in [r]
// (hook-content formula); 0 when length(lambda) > r.
BigInt num_ssyt(const Partition& lambda, int r);

// s_lambda(x) as the SSYT generating sum, exact. A uniform spectrum
// (all nonzero entries equal) takes the hook-content fast path with no
// size limit; otherwise |lambda| must stay within `limit`.
Rational schur_eval(const Partition& lambda, const std::vector<Rational>& x,
                    int limit = kDefaultSchurEnumerationLimit);
double schur_eval(const Partition& lambda, const std::vector<double>& x,
                  int limit = kDefaultSchurEnumerationLimit);

// All valid lambda + e_i with length <= d, ordered by row index.
std::vector<Partition> pieri_expand(const Partition& lambda, int d);

// The necessary conditions for c^tau_{lambda mu} > 0: sizes add up, both
// factors embed in tau, and length(tau) <= d. True does NOT assert the
// coefficient is actually positive.
bool lr_admissible(const Partition& lambda, const Partition& mu,
                   const Partition& tau, int d);

// prod_{cells of tau \ lambda} (r + content) / (d + content), exact.
Rational content_ratio_product(const Partition& lambda, const Partition& tau,
                               int r, int d);

// E[nu_lambda(P)] scalar for a Haar random rank-r projector in C^d:
// s_lambda(1^r) / s_lambda(1^d) = prod (r + content)/(d + content).
Rational haar_irrep_scalar(const Partition& lambda, int r, int d);

}  // namespace ptomo
