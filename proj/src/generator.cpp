#include <canalis/errors.hpp>
#include <canalis/generator.hpp>
#include <canalis/limits.hpp>
#include <canalis/probability.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace canalis
{

void generator_config::validate() const
{
  auto const cap = active_caps().gen;
  if ( n < 1 || n > cap )
    throw range_error( "n = " + std::to_string( n ) + " is outside [1, " + std::to_string( cap ) + "]" );
  if ( !p.is_interior() )
    throw range_error( "generator bias must satisfy 0 < p < 1, got " + to_fraction_string( p.value() ) );
  if ( max_rejections < 1 )
    throw range_error( "max_rejections must be at least 1" );
}

category_weights make_category_weights( unsigned n, const bias& p )
{
  auto breakdown = prob_breakdown( n, p );
  category_weights w;
  w.w_bc = std::move( breakdown.pr_both_ways );
  w.w_pce = std::move( breakdown.pr_pce );
  w.w_nce = std::move( breakdown.pr_nce );
  w.total = std::move( breakdown.pr_canalizing );
  return w;
}

category_sampler::category_sampler( const category_weights& weights )
{
  std::vector<std::pair<category, const exact_prob*>> entries;
  entries.push_back( { category{ 0, false }, &weights.w_bc } );
  for ( auto const& [k, w] : weights.w_pce )
  {
    entries.push_back( { category{ k, true }, &w } );
    if ( auto it = weights.w_nce.find( k ); it != weights.w_nce.end() )
      entries.push_back( { category{ k, false }, &it->second } );
  }

  mpz_class den = 1;
  for ( auto const& e : entries )
  {
    if ( *e.second < 0 )
      throw std::logic_error( "negative category weight" );
    mpz_lcm( den.get_mpz_t(), den.get_mpz_t(), e.second->get_den().get_mpz_t() );
  }

  mpz_class running = 0;
  for ( auto const& e : entries )
  {
    running += e.second->get_num() * ( den / e.second->get_den() );
    categories_.push_back( e.first );
    cumulative_.push_back( running );
  }
  total_ = running;
  if ( total_ == 0 )
    throw range_error( "all category weights are zero" );
}

category category_sampler::sample( random_stream& rng ) const
{
  // After m bits the uniform lies in [k, k+1) / 2^m; scaled by total it must
  // fit between two consecutive cumulative edges.
  mpz_class k = 0;
  mpz_class lo, hi, edge;
  for ( unsigned m = 1;; ++m )
  {
    k <<= 1;
    if ( rng.next_bit() )
      ++k;
    lo = k * total_;
    hi = lo + total_;
    for ( std::size_t j = 0; j < cumulative_.size(); ++j )
    {
      edge = cumulative_[j];
      edge <<= m;
      if ( lo < edge )
      {
        if ( hi <= edge )
          return categories_[j];
        break;
      }
    }
  }
}

exact_prob category_sampler::probability( const category& c ) const
{
  for ( std::size_t j = 0; j < categories_.size(); ++j )
  {
    if ( categories_[j] == c )
    {
      mpz_class const width = cumulative_[j] - ( j == 0 ? mpz_class( 0 ) : cumulative_[j - 1] );
      exact_prob x( width, total_ );
      x.canonicalize();
      return x;
    }
  }
  return 0;
}

category sample_category( const category_weights& weights, random_stream& rng )
{
  return category_sampler( weights ).sample( rng );
}

canalizing_generator::canalizing_generator( const generator_config& config )
    : config_( ( config.validate(), config ) ),
      weights_( make_category_weights( config.n, config.p ) ),
      sampler_( weights_ ),
      rng_( config.seed ),
      fill_( config.p.value() )
{
}

truth_table canalizing_generator::next( draw_record* record )
{
  return next( rng_, record );
}

truth_table canalizing_generator::next( random_stream& rng, draw_record* record )
{
  draw_record local;
  auto& rec = record ? *record : local;
  rec = draw_record{};

  auto const cat = sampler_.sample( rng );
  if ( cat.q == 0 )
    return draw_both_ways( rng, rec );
  return draw_exactly( rng, cat.q, cat.r, rec );
}

truth_table canalizing_generator::draw_both_ways( random_stream& rng, draw_record& record )
{
  auto const n = config_.n;
  auto const variable = static_cast<unsigned>( rng.uniform_below( n ) );
  bool const projection = rng.next_bit();

  truth_table table( n );
  for ( std::uint64_t e = 0; e < table.num_bits(); ++e )
  {
    bool const x = ( e >> variable ) & 1u;
    table.set_bit( e, projection ? x : !x );
  }

  record.q = 0;
  record.r = projection; // x_i = 1 forces 1 for the projection, 0 for the negation
  record.bc_variable = variable;
  return table;
}

truth_table canalizing_generator::draw_exactly( random_stream& rng, unsigned q, bool r, draw_record& record )
{
  auto const n = config_.n;

  std::vector<unsigned> order( n );
  std::iota( order.begin(), order.end(), 0u );
  for ( unsigned j = 0; j < q; ++j )
    std::swap( order[j], order[j + rng.uniform_below( n - j )] );
  std::vector<unsigned> subset( order.begin(), order.begin() + q );
  std::sort( subset.begin(), subset.end() );

  std::vector<bool> forcing( q );
  std::uint32_t subset_mask = 0;
  std::uint64_t free_base = 0; // inputs with x_i != s(i) on all of S
  for ( unsigned j = 0; j < q; ++j )
  {
    forcing[j] = rng.next_bit();
    subset_mask |= std::uint32_t{ 1 } << subset[j];
    if ( !forcing[j] )
      free_base |= std::uint64_t{ 1 } << subset[j];
  }

  std::vector<unsigned> others;
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( !( ( subset_mask >> i ) & 1u ) )
      others.push_back( i );
  }
  std::vector<std::uint64_t> free_entries( std::uint64_t{ 1 } << others.size() );
  for ( std::uint64_t c = 0; c < free_entries.size(); ++c )
  {
    auto index = free_base;
    for ( std::size_t j = 0; j < others.size(); ++j )
      index |= ( ( c >> j ) & 1u ) << others[j];
    free_entries[c] = index;
  }

  truth_table table( n );
  if ( r )
  {
    for ( auto& w : table.mutable_words() )
      w = ~std::uint64_t{ 0 };
    table.mask_padding();
  }

  std::uint64_t rejections = 0;
  if ( q == n )
  {
    // One free entry. The constant r arises from every one of the 2^n
    // signatures while each other member has exactly one, so the refill loop
    // would keep a constant fill with probability 2^-n. Its outcome is then
    // "constant" with probability a / (a + 2^n (1 - a)), a = Pr(free entry
    // = r); draw that directly. At n = 1 the only member is the constant.
    exact_prob const a = r ? config_.p.value() : exact_prob( 1 - config_.p.value() );
    exact_prob keep_constant = n == 1 ? exact_prob( 1 ) : exact_prob( a / ( a + pow2( n ) * ( 1 - a ) ) );
    keep_constant.canonicalize();
    bool const constant = rng.uniform_below( mpz_class( keep_constant.get_den() ) ) < keep_constant.get_num();
    table.set_bit( free_entries.front(), constant ? r : !r );
  }
  else
  {
    auto const forced_dir = r ? direction::positive : direction::negative;
    auto const other_dir = r ? direction::negative : direction::positive;
    for ( ;; )
    {
      for ( std::size_t c = 0; c < free_entries.size(); c += 64 )
      {
        auto const bits = fill_.next( rng );
        auto const count = std::min<std::size_t>( 64, free_entries.size() - c );
        for ( std::size_t j = 0; j < count; ++j )
          table.set_bit( free_entries[c + j], ( bits >> j ) & 1u );
      }

      // constants fail the first test since q < n
      auto const profile = classify( table );
      if ( profile.variables( forced_dir ) == subset_mask && profile.variables( other_dir ) == 0 )
        break;

      if ( ++rejections >= config_.max_rejections )
      {
        throw rejection_limit_exceeded( "no member of the exactly-" + std::to_string( q ) + " class after " +
                                        std::to_string( rejections ) + " fills" );
      }
    }
  }

  record.q = q;
  record.r = r;
  record.subset = std::move( subset );
  record.forcing_values = std::move( forcing );
  record.rejections = rejections;
  return table;
}

std::pair<truth_table, draw_record> generate( const generator_config& config, random_stream& rng )
{
  canalizing_generator gen( config );
  draw_record record;
  auto table = gen.next( rng, &record );
  return { std::move( table ), std::move( record ) };
}

} // namespace canalis
