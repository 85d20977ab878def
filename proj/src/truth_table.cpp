#include <canalis/errors.hpp>
#include <canalis/limits.hpp>
#include <canalis/truth_table.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace canalis
{

namespace
{

/// Entries of a 64-bit word whose index has bit i set, for i < 6.
constexpr std::array<std::uint64_t, 6> projection_masks = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

std::uint64_t valid_mask( unsigned num_vars )
{
  return num_vars >= 6 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << ( 1u << num_vars ) ) - 1u;
}

void check_num_vars( unsigned num_vars )
{
  auto const cap = active_caps().table;
  if ( num_vars < 1 || num_vars > cap )
  {
    throw range_error( "number of variables " + std::to_string( num_vars ) + " is outside [1, " +
                       std::to_string( cap ) + "]" );
  }
}

} // namespace

truth_table::truth_table( unsigned num_vars ) : num_vars_( num_vars )
{
  check_num_vars( num_vars );
  words_.assign( num_vars <= 6 ? 1u : std::size_t{ 1 } << ( num_vars - 6 ), 0u );
}

bool truth_table::evaluate( std::span<const bool> inputs ) const
{
  if ( inputs.size() != num_vars_ )
    throw usage_error( "expected " + std::to_string( num_vars_ ) + " inputs, got " + std::to_string( inputs.size() ) );
  std::uint64_t index = 0;
  for ( unsigned i = 0; i < num_vars_; ++i )
    index |= std::uint64_t{ inputs[i] } << i;
  return get_bit( index );
}

void truth_table::mask_padding()
{
  words_.back() &= valid_mask( num_vars_ );
}

std::uint64_t truth_table::count_ones() const
{
  std::uint64_t ones = 0;
  for ( auto w : words_ )
    ones += std::popcount( w );
  return ones;
}

bool truth_table::is_constant( bool value ) const
{
  auto const full = value ? valid_mask( num_vars_ ) : 0u;
  return std::all_of( words_.begin(), words_.end(), [&]( auto w ) { return w == full; } );
}

truth_table truth_table::complement() const
{
  auto result = *this;
  for ( auto& w : result.words_ )
    w = ~w;
  result.mask_padding();
  return result;
}

namespace
{

template<typename Bits>
truth_table table_from_bits( unsigned num_vars, const Bits& bits )
{
  truth_table table( num_vars );
  if ( bits.size() != table.num_bits() )
  {
    throw usage_error( "truth table of " + std::to_string( num_vars ) + " variables needs " +
                       std::to_string( table.num_bits() ) + " entries, got " + std::to_string( bits.size() ) );
  }
  for ( std::uint64_t e = 0; e < bits.size(); ++e )
    table.set_bit( e, bits[e] );
  return table;
}

} // namespace

truth_table make_table( unsigned num_vars, std::span<const bool> bits )
{
  return table_from_bits( num_vars, bits );
}

truth_table make_table( unsigned num_vars, const std::vector<bool>& bits )
{
  return table_from_bits( num_vars, bits );
}

truth_table table_from_word( unsigned num_vars, std::uint64_t word )
{
  if ( num_vars > 6 )
    throw range_error( "table_from_word supports at most 6 variables" );
  truth_table table( num_vars );
  if ( word & ~valid_mask( num_vars ) )
    throw usage_error( "word has bits set above entry 2^n - 1" );
  table.mutable_words()[0] = word;
  return table;
}

std::string to_hex( const truth_table& table )
{
  static constexpr char digits[] = "0123456789abcdef";
  auto const num_digits = std::max<std::uint64_t>( 1u, table.num_bits() / 4u );
  std::string out( num_digits, '0' );
  auto const words = table.words();
  for ( std::uint64_t d = 0; d < num_digits; ++d )
  {
    auto const nibble = ( words[d / 16] >> ( 4 * ( d % 16 ) ) ) & 0xfu;
    out[num_digits - 1 - d] = digits[nibble];
  }
  return out;
}

truth_table from_hex( unsigned num_vars, std::string_view hex )
{
  truth_table table( num_vars );
  auto const num_digits = std::max<std::uint64_t>( 1u, table.num_bits() / 4u );
  if ( hex.size() != num_digits )
  {
    throw usage_error( "hex table for " + std::to_string( num_vars ) + " variables needs " +
                       std::to_string( num_digits ) + " digits, got " + std::to_string( hex.size() ) );
  }
  auto words = table.mutable_words();
  for ( std::uint64_t d = 0; d < num_digits; ++d )
  {
    char const c = hex[num_digits - 1 - d];
    std::uint64_t nibble;
    if ( c >= '0' && c <= '9' )
      nibble = c - '0';
    else if ( c >= 'a' && c <= 'f' )
      nibble = c - 'a' + 10;
    else if ( c >= 'A' && c <= 'F' )
      nibble = c - 'A' + 10;
    else
      throw usage_error( std::string( "invalid hex digit '" ) + c + "'" );
    words[d / 16] |= nibble << ( 4 * ( d % 16 ) );
  }
  if ( words.back() & ~valid_mask( num_vars ) )
    throw usage_error( "hex table sets entries beyond 2^" + std::to_string( num_vars ) );
  return table;
}

std::uint32_t canalizing_profile::variables( direction dir ) const
{
  auto const& list = dir == direction::positive ? positive : negative;
  std::uint32_t mask = 0;
  for ( auto const& c : list )
    mask |= std::uint32_t{ 1 } << c.variable;
  return mask;
}

std::optional<bool> canalizing_profile::forcing_value( unsigned variable, direction dir ) const
{
  if ( is_constant() )
    return std::nullopt;
  auto const& list = dir == direction::positive ? positive : negative;
  for ( auto const& c : list )
  {
    if ( c.variable == variable )
      return c.value;
  }
  return std::nullopt;
}

bool is_canalizing_on( const truth_table& table, unsigned variable, bool input_value, bool output_value )
{
  if ( variable >= table.num_vars() )
  {
    throw range_error( "variable " + std::to_string( variable ) + " out of range for " +
                       std::to_string( table.num_vars() ) + " variables" );
  }
  auto const words = table.words();
  auto const valid = valid_mask( table.num_vars() );

  if ( variable < 6 )
  {
    auto const half = ( input_value ? projection_masks[variable] : ~projection_masks[variable] ) & valid;
    auto const want = output_value ? half : 0u;
    return std::all_of( words.begin(), words.end(), [&]( auto w ) { return ( w & half ) == want; } );
  }

  auto const stride_bit = variable - 6;
  auto const want = output_value ? ~std::uint64_t{ 0 } : 0u;
  for ( std::size_t w = 0; w < words.size(); ++w )
  {
    if ( ( ( w >> stride_bit ) & 1u ) == std::size_t{ input_value } && words[w] != want )
      return false;
  }
  return true;
}

canalizing_profile classify( const truth_table& table )
{
  canalizing_profile profile;
  profile.num_vars = table.num_vars();

  if ( table.is_constant( true ) )
    profile.constant_value = true;
  else if ( table.is_constant( false ) )
    profile.constant_value = false;

  for ( unsigned i = 0; i < table.num_vars(); ++i )
  {
    for ( bool s : { false, true } )
    {
      if ( is_canalizing_on( table, i, s, true ) )
        profile.positive.push_back( { i, s } );
      if ( is_canalizing_on( table, i, s, false ) )
        profile.negative.push_back( { i, s } );
    }
  }

  auto const pos = profile.variables( direction::positive );
  auto const neg = profile.variables( direction::negative );
  if ( auto const both = pos & neg; both != 0 )
    profile.both_ways_variable = static_cast<unsigned>( std::countr_zero( both ) );
  profile.num_canalizing_vars = static_cast<unsigned>( std::popcount( pos | neg ) );
  return profile;
}

bool is_canalizing( const truth_table& table )
{
  for ( unsigned i = 0; i < table.num_vars(); ++i )
  {
    for ( bool s : { false, true } )
    {
      if ( is_canalizing_on( table, i, s, true ) || is_canalizing_on( table, i, s, false ) )
        return true;
    }
  }
  return false;
}

} // namespace canalis
