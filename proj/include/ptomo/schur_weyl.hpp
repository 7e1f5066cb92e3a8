// schur_weyl.hpp
// Dense Schur-Weyl machinery at reference scale: symmetric-group
// characters (Murnaghan-Nakayama), permutation operators on (C^d)^{x n},
// tensor powers, and the isotypic character projectors Pi_lambda.

#pragma once

#include <cstdint>
#include <vector>

#include "ptomo/matrix.hpp"
#include "ptomo/partition.hpp"
#include "ptomo/rational.hpp"

namespace ptomo {

// Cycle type of a permutation in one-line notation (0-indexed images).
Partition cycle_type(const std::vector<int>& perm);

// Character chi_lambda at a conjugacy class given by cycle type mu.
BigInt sn_character(const Partition& lambda, const Partition& mu);

// P(pi) acting on (C^d)^{x n}: permutes tensor factors. The first factor
// is the most significant index digit, matching tensor_power below.
ComplexMatrix permutation_operator(const std::vector<int>& perm, int d);

// M^{x n} as a dense d^n x d^n matrix.
ComplexMatrix tensor_power(const ComplexMatrix& m, int n);

// Pi_lambda = (dim(lambda)/n!) sum_pi chi_lambda(pi) P(pi); dense, for
// d^n up to the limit.
ComplexMatrix isotypic_projector(const Partition& lambda, int n, int d,
                                 std::int64_t size_limit = 4096);

std::int64_t dense_dimension(int n, int d, std::int64_t size_limit);

}  // namespace ptomo
