#pragma once

#include <canalis/exact.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

namespace canalis
{

/*! \brief Exhaustive census of all 2^(2^n) functions of n variables.

  Built only from classify(); no closed form is consulted. Partial censuses
  over disjoint ranges merge associatively.
*/
struct class_census
{
  unsigned n = 0;
  big_count total_functions;
  big_count canalizing;
  big_count both_ways;
  std::map<unsigned, big_count> by_exact_k;
  std::map<unsigned, big_count> pce_by_k;
  std::map<unsigned, big_count> nce_by_k;
  std::map<unsigned, big_count> weight_enum_canalizing;               ///< w -> count
  std::map<std::pair<unsigned, unsigned>, big_count> weight_enum_pce; ///< (k, w) -> count
  std::map<std::pair<unsigned, unsigned>, big_count> weight_enum_nce;
  std::map<unsigned, big_count> weight_enum_both_ways;

  class_census& merge( const class_census& other );

  friend bool operator==( const class_census&, const class_census& ) = default;
};

/// Classifies every function of n variables, 1 <= n <= 4. Throws range_error otherwise.
class_census enumerate_classify( unsigned n );

/// Census over the table words [first, last) only; words encode the table as
/// in table_from_word().
class_census enumerate_classify_range( unsigned n, std::uint64_t first, std::uint64_t last );

/// sum_w N(w) p^w (1-p)^(2^n - w) over a weight enumerator.
exact_prob prob_from_weights( const std::map<unsigned, big_count>& weights, unsigned n, const exact_prob& p );

/// Pr_p(C) from the census weight enumerator.
exact_prob prob_from_census( const class_census& census, const exact_prob& p );

/// Pr_p(PCE_k) or Pr_p(NCE_k) from the per-class weight enumerators.
exact_prob prob_exactly_k_from_census( const class_census& census, unsigned k, bool positive, const exact_prob& p );

/// Pr_p(BC) from the census.
exact_prob prob_both_ways_from_census( const class_census& census, const exact_prob& p );

/// Canalizing test for a five-variable table packed in a 32-bit word, using
/// the 10 half-table masks (variable, input value).
bool is_canalizing_word5( std::uint32_t word );

/// Number of canalizing words in [first, last) of the 2^32 five-variable tables.
std::uint64_t deep_count_range( std::uint64_t first, std::uint64_t last );

using progress_callback = std::function<void( std::uint64_t done, std::uint64_t total )>;

/// Canalizing functions of five variables by exhaustive enumeration of all
/// 2^32 tables, split into blocks across `threads` workers (0 = hardware
/// concurrency).
std::uint64_t deep_count_n5( unsigned threads = 0, const progress_callback& progress = {} );

} // namespace canalis
