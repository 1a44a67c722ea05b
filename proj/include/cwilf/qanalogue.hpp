#pragma once

#include <span>

#include "cwilf/multipoly.hpp"

namespace cwilf {

/// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}; [0]_{p,q} = 0.
MultiPoly pq_int(int n);

/// [n]_{p,q}! with [0]_{p,q}! = 1.
MultiPoly pq_factorial(int n);

/// [n choose k]_{p,q} = [n]!/([k]![n-k]!), computed by exact division.
/// Out-of-range (k < 0 or k > n) throws; callers that want the
/// 0-outside-range convention use pq_binomial_or_zero.
MultiPoly pq_binomial(int n, int k);
MultiPoly pq_binomial_or_zero(int n, int k);

// q-analogues: the p = 1 specializations.
MultiPoly q_int(int n);
MultiPoly q_factorial(int n);
MultiPoly q_binomial(int n, int k);
MultiPoly q_binomial_or_zero(int n, int k);

/// [n; b_1,...,b_k]_q = [n]_q! / ([b_1]_q! ... [b_k]_q!); the parts must
/// be non-negative and sum to n. Divisibility is exact by construction
/// and checked.
MultiPoly q_multinomial(int n, std::span<const int> parts);

} // namespace cwilf
