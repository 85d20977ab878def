#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canalis
{

/*! \brief Boolean function of n variables stored as a packed truth table.

  Entry e holds f(x) for the input x whose variable i equals bit i of e, so
  variable 0 is the least significant index bit. Bits are packed 64 per word,
  entry e in bit (e % 64) of word (e / 64). Unused high bits of the last word
  (n < 6) are always zero.
*/
class truth_table
{
public:
  /// Constant-0 function of `num_vars` variables. Throws range_error if n is outside [1, cap].
  explicit truth_table( unsigned num_vars );

  unsigned num_vars() const noexcept { return num_vars_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t{ 1 } << num_vars_; }

  bool get_bit( std::uint64_t index ) const
  {
    return ( words_[index >> 6] >> ( index & 63u ) ) & 1u;
  }

  void set_bit( std::uint64_t index, bool value )
  {
    auto const mask = std::uint64_t{ 1 } << ( index & 63u );
    if ( value )
      words_[index >> 6] |= mask;
    else
      words_[index >> 6] &= ~mask;
  }

  /// f(x) for an input given as one bit per variable (x[0] is variable 0).
  bool evaluate( std::span<const bool> inputs ) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  /// Clears padding bits above 2^n; call after writing through mutable_words().
  void mask_padding();

  std::uint64_t count_ones() const;
  bool is_constant( bool value ) const;

  truth_table complement() const;

  friend bool operator==( const truth_table&, const truth_table& ) = default;

private:
  unsigned num_vars_;
  std::vector<std::uint64_t> words_;
};

/// Builds a table from one entry per input, in index order. Throws usage_error
/// on a length mismatch and range_error if n is out of range.
truth_table make_table( unsigned num_vars, std::span<const bool> bits );
truth_table make_table( unsigned num_vars, const std::vector<bool>& bits );

/// Table for n <= 6 from the low 2^n bits of `word`.
truth_table table_from_word( unsigned num_vars, std::uint64_t word );

/// Lowercase hex, ceil(2^n / 4) digits, most significant digit first; bit e of
/// the encoded integer is entry e.
std::string to_hex( const truth_table& table );

/// Inverse of to_hex. Upper-case digits are accepted. Throws usage_error on a
/// wrong length, a bad digit, or bits set above entry 2^n - 1.
truth_table from_hex( unsigned num_vars, std::string_view hex );

/// One (variable, input value) pair of the forcing condition x_i = s.
struct canalizing_input
{
  unsigned variable;
  bool value;

  friend auto operator<=>( const canalizing_input&, const canalizing_input& ) = default;
};

enum class direction
{
  negative = 0,
  positive = 1
};

/*! \brief All canalizing properties of one function.

  `positive` lists every (i, s) with x_i = s forcing f = 1, `negative` every
  (i, s) forcing f = 0, both sorted. Constants list every pair in their
  output's direction. The stored value s is the forcing input; a signature in
  the "x_i != sigma(i) forces the output" orientation is sigma(i) = 1 - s.
*/
struct canalizing_profile
{
  unsigned num_vars = 0;
  std::vector<canalizing_input> positive;
  std::vector<canalizing_input> negative;
  std::optional<unsigned> both_ways_variable;
  std::optional<bool> constant_value;
  unsigned num_canalizing_vars = 0;

  bool is_constant() const noexcept { return constant_value.has_value(); }
  bool is_canalizing() const noexcept { return !positive.empty() || !negative.empty(); }

  /// Bit i set iff variable i appears in the given direction.
  std::uint32_t variables( direction dir ) const;

  /// The forcing value of `variable` in `dir`, if it is canalizing there and
  /// the function is not constant (for which both values force).
  std::optional<bool> forcing_value( unsigned variable, direction dir ) const;

  friend bool operator==( const canalizing_profile&, const canalizing_profile& ) = default;
};

/// True iff every entry whose input has x_i = s equals v. Throws range_error if i >= n.
bool is_canalizing_on( const truth_table& table, unsigned variable, bool input_value, bool output_value );

canalizing_profile classify( const truth_table& table );

bool is_canalizing( const truth_table& table );

} // namespace canalis
