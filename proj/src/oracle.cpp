#include <canalis/errors.hpp>
#include <canalis/limits.hpp>
#include <canalis/oracle.hpp>
#include <canalis/truth_table.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace canalis
{

namespace
{

template<typename Key>
void add_into( std::map<Key, big_count>& into, const std::map<Key, big_count>& from )
{
  for ( auto const& [key, value] : from )
    into[key] += value;
}

void check_enumeration_range( unsigned n )
{
  if ( n < 1 || n > max_enumeration_vars )
  {
    throw range_error( "exhaustive enumeration supports 1 <= n <= " + std::to_string( max_enumeration_vars ) +
                       ", got " + std::to_string( n ) );
  }
}

} // namespace

class_census& class_census::merge( const class_census& other )
{
  if ( n != other.n )
    throw usage_error( "cannot merge censuses of different n" );
  total_functions += other.total_functions;
  canalizing += other.canalizing;
  both_ways += other.both_ways;
  add_into( by_exact_k, other.by_exact_k );
  add_into( pce_by_k, other.pce_by_k );
  add_into( nce_by_k, other.nce_by_k );
  add_into( weight_enum_canalizing, other.weight_enum_canalizing );
  add_into( weight_enum_pce, other.weight_enum_pce );
  add_into( weight_enum_nce, other.weight_enum_nce );
  add_into( weight_enum_both_ways, other.weight_enum_both_ways );
  return *this;
}

class_census enumerate_classify_range( unsigned n, std::uint64_t first, std::uint64_t last )
{
  check_enumeration_range( n );
  auto const num_functions = std::uint64_t{ 1 } << ( 1u << n );
  if ( first > last || last > num_functions )
    throw range_error( "enumeration range exceeds 2^(2^n)" );

  class_census census;
  census.n = n;
  for ( unsigned k = 1; k <= n; ++k )
  {
    census.by_exact_k[k] = 0;
    census.pce_by_k[k] = 0;
    census.nce_by_k[k] = 0;
  }

  std::uint64_t canalizing = 0, both_ways = 0;
  std::vector<std::uint64_t> by_k( n + 1 ), pce( n + 1 ), nce( n + 1 );
  auto const weights = ( 1u << n ) + 1;
  std::vector<std::uint64_t> w_all( weights ), w_bc( weights );
  std::vector<std::vector<std::uint64_t>> w_pce( n + 1, std::vector<std::uint64_t>( weights ) );
  auto w_nce = w_pce;

  for ( auto word = first; word < last; ++word )
  {
    auto const table = table_from_word( n, word );
    auto const profile = classify( table );
    if ( !profile.is_canalizing() )
      continue;
    auto const w = std::popcount( word );
    ++canalizing;
    ++by_k[profile.num_canalizing_vars];
    ++w_all[w];
    auto const pos = profile.variables( direction::positive );
    auto const neg = profile.variables( direction::negative );
    if ( profile.both_ways_variable )
    {
      ++both_ways;
      ++w_bc[w];
    }
    else if ( neg == 0 )
    {
      auto const k = std::popcount( pos );
      ++pce[k];
      ++w_pce[k][w];
    }
    else
    {
      auto const k = std::popcount( neg );
      ++nce[k];
      ++w_nce[k][w];
    }
  }

  auto big = []( std::uint64_t v ) {
    big_count b;
    mpz_import( b.get_mpz_t(), 1, 1, sizeof( v ), 0, 0, &v );
    return b;
  };

  census.total_functions = big( last - first );
  census.canalizing = big( canalizing );
  census.both_ways = big( both_ways );
  for ( unsigned k = 1; k <= n; ++k )
  {
    census.by_exact_k[k] = big( by_k[k] );
    census.pce_by_k[k] = big( pce[k] );
    census.nce_by_k[k] = big( nce[k] );
  }
  for ( unsigned w = 0; w < weights; ++w )
  {
    if ( w_all[w] )
      census.weight_enum_canalizing[w] = big( w_all[w] );
    if ( w_bc[w] )
      census.weight_enum_both_ways[w] = big( w_bc[w] );
    for ( unsigned k = 1; k <= n; ++k )
    {
      if ( w_pce[k][w] )
        census.weight_enum_pce[{ k, w }] = big( w_pce[k][w] );
      if ( w_nce[k][w] )
        census.weight_enum_nce[{ k, w }] = big( w_nce[k][w] );
    }
  }
  return census;
}

class_census enumerate_classify( unsigned n )
{
  check_enumeration_range( n );
  return enumerate_classify_range( n, 0, std::uint64_t{ 1 } << ( 1u << n ) );
}

exact_prob prob_from_weights( const std::map<unsigned, big_count>& weights, unsigned n, const exact_prob& p )
{
  auto const size = 1ul << n;
  exact_prob const q = 1 - p;
  exact_prob sum = 0;
  for ( auto const& [w, count] : weights )
  {
    mpz_class pn, pd, qn, qd;
    mpz_pow_ui( pn.get_mpz_t(), p.get_num().get_mpz_t(), w );
    mpz_pow_ui( pd.get_mpz_t(), p.get_den().get_mpz_t(), w );
    mpz_pow_ui( qn.get_mpz_t(), q.get_num().get_mpz_t(), size - w );
    mpz_pow_ui( qd.get_mpz_t(), q.get_den().get_mpz_t(), size - w );
    exact_prob term( count * pn * qn, pd * qd );
    term.canonicalize();
    sum += term;
  }
  return sum;
}

exact_prob prob_from_census( const class_census& census, const exact_prob& p )
{
  return prob_from_weights( census.weight_enum_canalizing, census.n, p );
}

exact_prob prob_exactly_k_from_census( const class_census& census, unsigned k, bool positive, const exact_prob& p )
{
  auto const& source = positive ? census.weight_enum_pce : census.weight_enum_nce;
  std::map<unsigned, big_count> slice;
  for ( auto const& [key, count] : source )
  {
    if ( key.first == k )
      slice[key.second] = count;
  }
  return prob_from_weights( slice, census.n, p );
}

exact_prob prob_both_ways_from_census( const class_census& census, const exact_prob& p )
{
  return prob_from_weights( census.weight_enum_both_ways, census.n, p );
}

namespace
{

/// Entries of a five-variable table whose index has bit i set.
constexpr std::uint32_t half_masks[5] = { 0xaaaaaaaau, 0xccccccccu, 0xf0f0f0f0u, 0xff00ff00u, 0xffff0000u };

inline std::uint32_t canalizing_flag( std::uint32_t w )
{
  std::uint32_t hit = 0;
  for ( auto const m : half_masks )
  {
    auto const h1 = w & m;
    auto const h0 = w & ~m;
    hit |= ( h1 == 0 ) | ( h1 == m ) | ( h0 == 0 ) | ( h0 == ~m );
  }
  return hit;
}

} // namespace

bool is_canalizing_word5( std::uint32_t word )
{
  return canalizing_flag( word ) != 0;
}

std::uint64_t deep_count_range( std::uint64_t first, std::uint64_t last )
{
  constexpr std::uint64_t space = std::uint64_t{ 1 } << 32;
  if ( first > last || last > space )
    throw range_error( "range exceeds the 2^32 five-variable tables" );

  std::uint64_t count = 0;
  while ( first < last )
  {
    // inner chunks stay below 2^32 words so the loop runs on 32-bit lanes
    auto const chunk_end = std::min( last, first + ( std::uint64_t{ 1 } << 20 ) );
    auto const base = static_cast<std::uint32_t>( first );
    auto const len = static_cast<std::uint32_t>( chunk_end - first );
    std::uint32_t partial = 0;
    for ( std::uint32_t j = 0; j < len; ++j )
      partial += canalizing_flag( base + j );
    count += partial;
    first = chunk_end;
  }
  return count;
}

std::uint64_t deep_count_n5( unsigned threads, const progress_callback& progress )
{
  constexpr std::uint64_t space = std::uint64_t{ 1 } << 32;
  constexpr std::uint64_t block = std::uint64_t{ 1 } << 24;
  constexpr std::uint64_t num_blocks = space / block;

  if ( threads == 0 )
    threads = std::max( 1u, std::thread::hardware_concurrency() );
  threads = static_cast<unsigned>( std::min<std::uint64_t>( threads, num_blocks ) );

  std::atomic<std::uint64_t> next_block{ 0 };
  std::atomic<std::uint64_t> total{ 0 };
  std::atomic<std::uint64_t> finished{ 0 };
  std::mutex report;

  auto worker = [&] {
    for ( ;; )
    {
      auto const b = next_block.fetch_add( 1 );
      if ( b >= num_blocks )
        return;
      total += deep_count_range( b * block, ( b + 1 ) * block );
      auto const done = finished.fetch_add( 1 ) + 1;
      if ( progress )
      {
        std::lock_guard lock( report );
        progress( done * block, space );
      }
    }
  };

  std::vector<std::jthread> pool;
  for ( unsigned t = 1; t < threads; ++t )
    pool.emplace_back( worker );
  worker();
  pool.clear();
  return total.load();
}

} // namespace canalis
