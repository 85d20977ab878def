#include <canalis/errors.hpp>
#include <canalis/exact_counts.hpp>
#include <canalis/limits.hpp>
#include <canalis/probability.hpp>

#include <string>

namespace canalis
{

namespace
{

void check_prob_range( unsigned n )
{
  auto const cap = active_caps().prob;
  if ( n < 1 || n > cap )
  {
    throw range_error( "n = " + std::to_string( n ) + " is outside [1, " + std::to_string( cap ) + "]" );
  }
}

void check_k( unsigned n, unsigned k )
{
  if ( k < 1 || k > n )
  {
    throw range_error( "k = " + std::to_string( k ) + " is outside [1, " + std::to_string( n ) + "]" );
  }
}

/*! Every probability here is a polynomial in p and 1-p of total degree at
  most 2^n. With p = a/b, each monomial p^e (1-p)^f is an integer divided by
  b^(2^n), so all sums run over integers and one fraction is formed at the end.
*/
class scaled_measure
{
public:
  scaled_measure( unsigned n, const bias& p )
      : n_( n ), size_( std::uint64_t{ 1 } << n ), a_( p.num() ), c_( p.den() - p.num() ), b_( p.den() )
  {
  }

  /// p^e (or (1-p)^e for the negative direction), scaled by b^(2^n).
  mpz_class power( direction dir, std::uint64_t e ) const
  {
    mpz_class x, y;
    mpz_pow_ui( x.get_mpz_t(), dir == direction::positive ? a_.get_mpz_t() : c_.get_mpz_t(), e );
    mpz_pow_ui( y.get_mpz_t(), b_.get_mpz_t(), size_ - e );
    return x * y;
  }

  /// p^(2^(n-1)) (1-p)^(2^(n-1)), scaled.
  mpz_class half_and_half() const
  {
    mpz_class x, y;
    mpz_pow_ui( x.get_mpz_t(), a_.get_mpz_t(), size_ / 2 );
    mpz_pow_ui( y.get_mpz_t(), c_.get_mpz_t(), size_ / 2 );
    return x * y;
  }

  /// Nonconstant functions canalizing in `dir` on a fixed k-block:
  /// 2^k (p^(2^n - 2^(n-k)) - p^(2^n)).
  mpz_class block( unsigned k, direction dir ) const
  {
    mpz_class v = power( dir, size_ - ( std::uint64_t{ 1 } << ( n_ - k ) ) ) - power( dir, size_ );
    v <<= k;
    return v;
  }

  mpz_class both_ways() const { return 2 * mpz_class( n_ ) * half_and_half(); }

  mpz_class canalizing() const
  {
    mpz_class sum = power( direction::positive, size_ ) + power( direction::negative, size_ );
    if ( n_ % 2 == 1 )
      sum = -sum;
    sum -= both_ways();
    for ( unsigned k = 1; k <= n_; ++k )
    {
      auto const e = size_ - ( std::uint64_t{ 1 } << ( n_ - k ) );
      mpz_class term = binomial( n_, k ) * ( power( direction::positive, e ) + power( direction::negative, e ) );
      term <<= k;
      if ( k % 2 == 1 )
        sum += term;
      else
        sum -= term;
    }
    return sum;
  }

  mpz_class exactly( unsigned k, direction dir ) const
  {
    if ( n_ == 1 )
    {
      // only the constant of this direction: p^2 or (1-p)^2
      return power( dir, 2 );
    }
    if ( k == n_ )
    {
      return block( n_, dir ) + power( dir, size_ );
    }
    if ( k == 1 )
    {
      mpz_class head = power( dir, size_ / 2 ) - power( dir, size_ ) - half_and_half();
      head *= 2 * mpz_class( n_ );
      for ( unsigned r = 2; r <= n_; ++r )
      {
        mpz_class term = mpz_class( r ) * binomial( n_, r ) * block( r, dir );
        if ( r % 2 == 1 )
          head += term;
        else
          head -= term;
      }
      return head;
    }
    mpz_class sum = 0;
    for ( unsigned r = k; r <= n_; ++r )
    {
      mpz_class term = binomial( r, k ) * binomial( n_, r ) * block( r, dir );
      if ( ( r - k ) % 2 == 0 )
        sum += term;
      else
        sum -= term;
    }
    return sum;
  }

  exact_prob to_prob( const mpz_class& scaled ) const
  {
    mpz_class den;
    mpz_pow_ui( den.get_mpz_t(), b_.get_mpz_t(), size_ );
    exact_prob x( scaled, den );
    x.canonicalize();
    return x;
  }

private:
  unsigned n_;
  std::uint64_t size_;
  mpz_class a_, c_, b_;
};

} // namespace

exact_prob prob_canalizing( unsigned n, const bias& p )
{
  check_prob_range( n );
  scaled_measure const m( n, p );
  return m.to_prob( m.canalizing() );
}

exact_prob prob_both_ways( unsigned n, const bias& p )
{
  check_prob_range( n );
  scaled_measure const m( n, p );
  return m.to_prob( m.both_ways() );
}

exact_prob prob_canalizing_on_block( unsigned n, unsigned k, const bias& p, direction dir )
{
  check_prob_range( n );
  check_k( n, k );
  scaled_measure const m( n, p );
  return m.to_prob( m.block( k, dir ) );
}

exact_prob prob_exactly_k( unsigned n, unsigned k, const bias& p, direction dir )
{
  check_prob_range( n );
  check_k( n, k );
  scaled_measure const m( n, p );
  return m.to_prob( m.exactly( k, dir ) );
}

prob_breakdown_t prob_breakdown( unsigned n, const bias& p )
{
  check_prob_range( n );
  scaled_measure const m( n, p );
  prob_breakdown_t b;
  b.n = n;
  b.p = p.value();
  b.pr_canalizing = m.to_prob( m.canalizing() );
  b.pr_both_ways = m.to_prob( m.both_ways() );
  for ( unsigned k = 1; k <= n; ++k )
  {
    b.pr_pce[k] = m.to_prob( m.exactly( k, direction::positive ) );
    b.pr_nce[k] = m.to_prob( m.exactly( k, direction::negative ) );
  }
  return b;
}

} // namespace canalis
