#include <canalis/errors.hpp>
#include <canalis/exact_counts.hpp>
#include <canalis/limits.hpp>

#include <string>

namespace canalis
{

namespace
{

void check_count_range( unsigned n, unsigned min_n = 1 )
{
  auto const cap = active_caps().count;
  if ( n < min_n || n > cap )
  {
    throw range_error( "n = " + std::to_string( n ) + " is outside [" + std::to_string( min_n ) + ", " +
                       std::to_string( cap ) + "]" );
  }
}

/// 2^(2^(n-r)) - 1, the number of non-all-ones fills of the 2^(n-r) free entries.
big_count free_fills( unsigned n, unsigned r )
{
  return pow2( 1ul << ( n - r ) ) - 1;
}

/// sum_{r=k..n} coeff(r) (-1)^(r-k) C(n,r) 2^(r+1) (2^(2^(n-r)) - 1)
template<typename Coeff>
big_count alternating_block_sum( unsigned n, unsigned k, Coeff&& coeff )
{
  big_count sum = 0;
  for ( unsigned r = k; r <= n; ++r )
  {
    big_count term = coeff( r ) * binomial( n, r ) * free_fills( n, r );
    term <<= r + 1;
    if ( ( r - k ) % 2 == 0 )
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

} // namespace

big_count alternating_term( unsigned n, unsigned k )
{
  big_count s = binomial( n, k );
  s <<= ( k + 1 ) + ( 1ul << ( n - k ) );
  return s;
}

big_count count_canalizing( unsigned n )
{
  check_count_range( n );
  // 2((-1)^n - n)
  big_count total = n % 2 == 0 ? big_count( 2 ) - 2 * big_count( n ) : big_count( -2 ) - 2 * big_count( n );
  for ( unsigned k = 1; k <= n; ++k )
  {
    if ( k % 2 == 1 )
      total += alternating_term( n, k );
    else
      total -= alternating_term( n, k );
  }
  if ( total < 0 )
    throw std::logic_error( "negative canalizing count" );
  return total;
}

big_count count_exact_k( unsigned n, unsigned k )
{
  check_count_range( n );
  if ( k < 1 || k > n )
  {
    throw range_error( "k = " + std::to_string( k ) + " is outside [1, " + std::to_string( n ) + "]" );
  }

  if ( k == 1 && n == 1 )
  {
    return 4;
  }
  if ( k == n )
  {
    return 2 + pow2( n + 1 );
  }
  if ( k == 1 )
  {
    // 2n(2^(1 + 2^(n-1)) - 3) + sum_{r=2..n} r (-1)^(r-1) C(n,r) 2^(r+1) (2^(2^(n-r)) - 1)
    big_count c = 2 * big_count( n ) * ( pow2( 1ul + ( 1ul << ( n - 1 ) ) ) - 3 );
    c -= alternating_block_sum( n, 2, []( unsigned r ) { return big_count( r ); } );
    return c;
  }
  return alternating_block_sum( n, k, [k]( unsigned r ) { return binomial( r, k ); } );
}

big_count count_both_ways( unsigned n )
{
  if ( n < 1 )
    throw range_error( "n must be at least 1" );
  return 2 * big_count( n );
}

asymptotic_bounds_t asymptotic_bounds( unsigned n )
{
  check_count_range( n, 2 );
  asymptotic_bounds_t b;
  b.s1 = alternating_term( n, 1 );
  b.s2 = alternating_term( n, 2 );
  big_count const head = n % 2 == 0 ? big_count( 2 ) - 2 * big_count( n ) : big_count( -2 ) - 2 * big_count( n );
  b.upper = head + b.s1;
  b.lower = b.upper - b.s2;
  b.aldana_bound = b.s1;
  return b;
}

} // namespace canalis
