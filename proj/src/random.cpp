#include <canalis/random.hpp>

#include <bit>
#include <stdexcept>

namespace canalis
{

std::uint64_t random_stream::next_word()
{
  return engine_();
}

bool random_stream::next_bit()
{
  if ( bits_left_ == 0 )
  {
    bit_buffer_ = engine_();
    bits_left_ = 64;
  }
  bool const bit = bit_buffer_ & 1u;
  bit_buffer_ >>= 1;
  --bits_left_;
  return bit;
}

std::uint64_t random_stream::uniform_below( std::uint64_t bound )
{
  if ( bound == 0 )
    throw std::invalid_argument( "uniform_below: bound must be positive" );
  if ( bound == 1 )
    return 0;
  auto const mask = bound > ( std::uint64_t{ 1 } << 63 ) ? ~std::uint64_t{ 0 } : std::bit_ceil( bound ) - 1;
  for ( ;; )
  {
    auto const v = engine_() & mask;
    if ( v < bound )
      return v;
  }
}

mpz_class random_stream::uniform_below( const mpz_class& bound )
{
  if ( bound <= 0 )
    throw std::invalid_argument( "uniform_below: bound must be positive" );
  auto const bits = mpz_sizeinbase( bound.get_mpz_t(), 2 );
  auto const words = ( bits + 63 ) / 64;
  for ( ;; )
  {
    mpz_class v = 0;
    for ( std::size_t w = 0; w < words; ++w )
    {
      v <<= 64;
      mpz_class word;
      auto const raw = engine_();
      mpz_import( word.get_mpz_t(), 1, 1, sizeof( raw ), 0, 0, &raw );
      v += word;
    }
    mpz_fdiv_r_2exp( v.get_mpz_t(), v.get_mpz_t(), bits );
    if ( v < bound )
      return v;
  }
}

bernoulli_words::bernoulli_words( const mpq_class& p ) : remainder_( p.get_num() ), den_( p.get_den() )
{
  if ( p <= 0 )
  {
    trivial_ = true;
    trivial_word_ = 0;
  }
  else if ( p >= 1 )
  {
    trivial_ = true;
    trivial_word_ = ~std::uint64_t{ 0 };
  }
}

bool bernoulli_words::expansion_bit( std::size_t index )
{
  while ( expansion_.size() <= index )
  {
    remainder_ <<= 1;
    if ( remainder_ >= den_ )
    {
      remainder_ -= den_;
      expansion_.push_back( true );
    }
    else
    {
      expansion_.push_back( false );
    }
  }
  return expansion_[index];
}

std::uint64_t bernoulli_words::next( random_stream& rng )
{
  if ( trivial_ )
    return trivial_word_;

  std::uint64_t result = 0;
  std::uint64_t undecided = ~std::uint64_t{ 0 };
  for ( std::size_t j = 0; undecided != 0; ++j )
  {
    auto const u = rng.next_word();
    if ( expansion_bit( j ) )
    {
      // lanes with uniform bit 0 fall below p
      result |= undecided & ~u;
      undecided &= u;
    }
    else
    {
      undecided &= ~u;
    }
  }
  return result;
}

} // namespace canalis
