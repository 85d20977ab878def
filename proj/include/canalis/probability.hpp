#pragma once

#include <canalis/exact.hpp>
#include <canalis/truth_table.hpp>

#include <map>

namespace canalis
{

/// Pr_p(C): probability that a p-biased random function of n variables is canalizing.
exact_prob prob_canalizing( unsigned n, const bias& p );

/// Pr_p(BC) = 2n p^(2^(n-1)) (1-p)^(2^(n-1)).
exact_prob prob_both_ways( unsigned n, const bias& p );

/// Probability of the nonconstant functions canalizing in `dir` on the fixed
/// block of variables {0, ..., k-1}, 1 <= k <= n:
/// 2^k (p^(2^n - 2^(n-k)) - p^(2^n)) for positive, with 1-p for negative.
exact_prob prob_canalizing_on_block( unsigned n, unsigned k, const bias& p, direction dir );

/*! \brief Pr_p(PCE_k) or Pr_p(NCE_k).

  Probability of being canalizing in `dir` (and not in the other direction) on
  exactly k variables. The constant of that direction belongs to k = n. At
  n = 1 the classes are {1} and {0}, giving p^2 and (1-p)^2.
*/
exact_prob prob_exactly_k( unsigned n, unsigned k, const bias& p, direction dir );

struct prob_breakdown_t
{
  unsigned n = 0;
  exact_prob p;
  exact_prob pr_canalizing;
  exact_prob pr_both_ways;
  std::map<unsigned, exact_prob> pr_pce; ///< keyed by k = 1..n
  std::map<unsigned, exact_prob> pr_nce;
};

/// All of the above for one (n, p). pr_both_ways plus every pr_pce and pr_nce
/// sums to pr_canalizing exactly.
prob_breakdown_t prob_breakdown( unsigned n, const bias& p );

} // namespace canalis
