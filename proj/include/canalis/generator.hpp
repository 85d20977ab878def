#pragma once

#include <canalis/exact.hpp>
#include <canalis/random.hpp>
#include <canalis/truth_table.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace canalis
{

struct generator_config
{
  unsigned n = 1;
  bias p{ exact_prob( 1, 2 ) };
  std::uint64_t seed = 0;
  unsigned max_rejections = 10000;

  /// Throws range_error unless 1 <= n <= gen cap, 0 < p < 1 and max_rejections >= 1.
  void validate() const;
};

/// Unnormalized category probabilities; total = Pr_p(C).
struct category_weights
{
  exact_prob w_bc;
  std::map<unsigned, exact_prob> w_pce;
  std::map<unsigned, exact_prob> w_nce;
  exact_prob total;
};

category_weights make_category_weights( unsigned n, const bias& p );

/// q = 0 selects the both-ways category; otherwise q = k and r = 1 for
/// positive, r = 0 for negative.
struct category
{
  unsigned q = 0;
  bool r = false;

  friend bool operator==( const category&, const category& ) = default;
};

/*! \brief Exact categorical sampler over the 2n + 1 categories.

  The joint draw of (q, r) equals drawing q with weight (PCE_q + NCE_q) / total
  and then r with weight PCE_q / (PCE_q + NCE_q). Categories are laid out as
  BC, PCE_1, NCE_1, ..., PCE_n, NCE_n on [0, 1); a uniform is drawn one bit at a
  time until its dyadic interval lies inside a single category.
*/
class category_sampler
{
public:
  explicit category_sampler( const category_weights& weights );

  category sample( random_stream& rng ) const;

  /// Exact probability of drawing `c`.
  exact_prob probability( const category& c ) const;

private:
  std::vector<category> categories_;
  std::vector<mpz_class> cumulative_; ///< integer upper edges over a common denominator
  mpz_class total_;
};

category sample_category( const category_weights& weights, random_stream& rng );

struct draw_record
{
  unsigned q = 0;
  bool r = false;
  std::vector<unsigned> subset;       ///< S, sorted, |S| = q
  std::vector<bool> forcing_values;   ///< s(S[j]) for each j
  std::optional<unsigned> bc_variable; ///< variable of the q = 0 draw
  std::uint64_t rejections = 0;
};

/*! \brief Random canalizing functions with law Pr_p conditioned on C.

  Owns its random stream; one instance is single-threaded, distinct instances
  are independent.
*/
class canalizing_generator
{
public:
  explicit canalizing_generator( const generator_config& config );

  /// Draws from the owned stream (seeded with config.seed).
  /// Throws rejection_limit_exceeded after max_rejections consecutive rejections.
  truth_table next( draw_record* record = nullptr );

  /// Same, drawing from an external stream.
  truth_table next( random_stream& rng, draw_record* record = nullptr );

  const category_weights& weights() const noexcept { return weights_; }
  const generator_config& config() const noexcept { return config_; }
  random_stream& rng() noexcept { return rng_; }

private:
  truth_table draw_both_ways( random_stream& rng, draw_record& record );
  truth_table draw_exactly( random_stream& rng, unsigned q, bool r, draw_record& record );

  generator_config config_;
  category_weights weights_;
  category_sampler sampler_;
  random_stream rng_;
  bernoulli_words fill_;
};

/// Single draw using `rng` (the config seed is ignored).
std::pair<truth_table, draw_record> generate( const generator_config& config, random_stream& rng );

} // namespace canalis
