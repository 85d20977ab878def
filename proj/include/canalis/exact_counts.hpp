#pragma once

#include <canalis/exact.hpp>

namespace canalis
{

/// Number of canalizing functions of n variables, 1 <= n <= count cap.
///
/// |C| = 2((-1)^n - n) + sum_{k=1..n} (-1)^(k+1) C(n,k) 2^(k+1) 2^(2^(n-k)).
big_count count_canalizing( unsigned n );

/// Number of functions canalizing on exactly k variables, 1 <= k <= n.
/// Constants count at k = n; the 2n projections and negations count at k = 1.
big_count count_exact_k( unsigned n, unsigned k );

/// 2n: the projections x_i and their negations.
big_count count_both_ways( unsigned n );

/// First two alternating-sum terms of |C| and the bounds they give.
struct asymptotic_bounds_t
{
  big_count s1;    ///< 4n 2^(2^(n-1))
  big_count s2;    ///< C(n,2) 2^3 2^(2^(n-2))
  big_count lower; ///< 2((-1)^n - n) + s1 - s2
  big_count upper; ///< 2((-1)^n - n) + s1
  big_count aldana_bound; ///< the classical 4n 2^(2^(n-1)) upper bound, equal to s1
};

/// Requires 2 <= n <= count cap.
asymptotic_bounds_t asymptotic_bounds( unsigned n );

/// S_k = C(n,k) 2^(k+1) 2^(2^(n-k)).
big_count alternating_term( unsigned n, unsigned k );

} // namespace canalis
