#include <canalis/errors.hpp>
#include <canalis/exact.hpp>

#include <algorithm>
#include <cctype>

namespace canalis
{

bias::bias( exact_prob p ) : p_( std::move( p ) )
{
  p_.canonicalize();
  if ( p_ < 0 || p_ > 1 )
  {
    throw range_error( "bias " + to_fraction_string( p_ ) + " is outside [0, 1]" );
  }
}

bias bias::complement() const
{
  return bias( exact_prob( 1 ) - p_ );
}

namespace
{

bool all_digits( std::string_view s )
{
  return !s.empty() && std::all_of( s.begin(), s.end(), []( unsigned char c ) { return std::isdigit( c ); } );
}

mpz_class parse_integer( std::string_view s, std::string_view whole )
{
  bool negative = false;
  if ( !s.empty() && ( s.front() == '-' || s.front() == '+' ) )
  {
    negative = s.front() == '-';
    s.remove_prefix( 1 );
  }
  if ( !all_digits( s ) )
  {
    throw usage_error( "cannot parse bias '" + std::string( whole ) + "'" );
  }
  mpz_class v( std::string( s ), 10 );
  return negative ? mpz_class( -v ) : v;
}

} // namespace

bias parse_bias( std::string_view text )
{
  auto const whole = text;
  while ( !text.empty() && std::isspace( static_cast<unsigned char>( text.front() ) ) )
    text.remove_prefix( 1 );
  while ( !text.empty() && std::isspace( static_cast<unsigned char>( text.back() ) ) )
    text.remove_suffix( 1 );

  if ( auto slash = text.find( '/' ); slash != std::string_view::npos )
  {
    auto const num = parse_integer( text.substr( 0, slash ), whole );
    auto const den = parse_integer( text.substr( slash + 1 ), whole );
    if ( den == 0 )
    {
      throw usage_error( "bias '" + std::string( whole ) + "' has a zero denominator" );
    }
    return bias( exact_prob( num, den ) );
  }

  bool negative = false;
  if ( !text.empty() && ( text.front() == '-' || text.front() == '+' ) )
  {
    negative = text.front() == '-';
    text.remove_prefix( 1 );
  }
  auto const dot = text.find( '.' );
  auto const int_part = text.substr( 0, dot );
  auto const frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr( dot + 1 );
  if ( ( int_part.empty() && frac_part.empty() ) || ( !int_part.empty() && !all_digits( int_part ) ) ||
       ( !frac_part.empty() && !all_digits( frac_part ) ) || ( dot != std::string_view::npos && frac_part.empty() && int_part.empty() ) )
  {
    throw usage_error( "cannot parse bias '" + std::string( whole ) + "'" );
  }
  mpz_class num( std::string( int_part ) + std::string( frac_part ), 10 );
  if ( negative )
    num = -num;
  mpz_class den;
  mpz_ui_pow_ui( den.get_mpz_t(), 10, frac_part.size() );
  return bias( exact_prob( num, den ) );
}

std::string to_fraction_string( const exact_prob& x )
{
  exact_prob y = x;
  y.canonicalize();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

namespace
{

/// num / den rounded half to even, for num >= 0, den > 0.
mpz_class round_half_even( const mpz_class& num, const mpz_class& den )
{
  mpz_class q, r;
  mpz_fdiv_qr( q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t() );
  mpz_class const twice = r * 2;
  int const c = cmp( twice, den );
  if ( c > 0 || ( c == 0 && mpz_odd_p( q.get_mpz_t() ) ) )
    ++q;
  return q;
}

} // namespace

std::string to_decimal_string( const exact_prob& x, unsigned digits )
{
  bool const negative = x < 0;
  mpz_class const num = abs( x.get_num() );
  mpz_class scale;
  mpz_ui_pow_ui( scale.get_mpz_t(), 10, digits );
  auto const scaled = round_half_even( num * scale, x.get_den() );

  auto text = scaled.get_str();
  if ( digits > 0 )
  {
    if ( text.size() <= digits )
      text.insert( 0, digits + 1 - text.size(), '0' );
    text.insert( text.size() - digits, "." );
  }
  if ( negative && scaled != 0 )
    text.insert( 0, "-" );
  return text;
}

std::string to_scientific_string( const big_count& x, unsigned significant )
{
  if ( x < 0 )
    throw range_error( "to_scientific_string requires a nonnegative value" );
  if ( significant == 0 )
    significant = 1;
  if ( x == 0 )
    return "0." + std::string( significant - 1, '0' ) + "e+0";

  auto digits = x.get_str();
  std::size_t exponent = digits.size() - 1;
  if ( digits.size() > significant )
  {
    mpz_class scale;
    mpz_ui_pow_ui( scale.get_mpz_t(), 10, digits.size() - significant );
    digits = round_half_even( x, scale ).get_str();
    if ( digits.size() > significant ) // carried into a new digit, e.g. 9.99.. -> 10.0..
    {
      ++exponent;
      digits.pop_back();
    }
  }
  else
  {
    digits.append( significant - digits.size(), '0' );
  }

  std::string out( 1, digits.front() );
  if ( significant > 1 )
    out += "." + digits.substr( 1 );
  out += "e+" + std::to_string( exponent );
  return out;
}

big_count pow2( unsigned long e )
{
  big_count v = 1;
  v <<= e;
  return v;
}

big_count binomial( unsigned long n, unsigned long k )
{
  big_count v;
  mpz_bin_uiui( v.get_mpz_t(), n, k );
  return v;
}

} // namespace canalis
