#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace canalis
{

/// Arbitrary-precision integer used for all function counts.
using big_count = mpz_class;

/// Exact rational used for all probabilities.
using exact_prob = mpq_class;

/// Bias of the product measure: each truth-table entry is 1 with probability p.
class bias
{
public:
  /// Throws range_error unless 0 <= p <= 1.
  explicit bias( exact_prob p );

  const exact_prob& value() const noexcept { return p_; }
  const mpz_class& num() const noexcept { return p_.get_num(); }
  const mpz_class& den() const noexcept { return p_.get_den(); }

  /// 1 - p
  bias complement() const;

  bool is_interior() const { return p_ > 0 && p_ < 1; }

  friend bool operator==( const bias& a, const bias& b ) { return a.p_ == b.p_; }

private:
  exact_prob p_;
};

/// Parses "a/b" or a finite decimal ("0.25", "1", ".5") into an exact bias.
///
/// Decimals are converted exactly, so "0.3" is 3/10. Throws usage_error on
/// unparsable text and range_error when the value falls outside [0, 1].
bias parse_bias( std::string_view text );

/// Canonical "numerator/denominator" form; integers keep the "/1" suffix.
std::string to_fraction_string( const exact_prob& x );

/// Fixed-point decimal with `digits` digits after the point, rounded half to even.
std::string to_decimal_string( const exact_prob& x, unsigned digits );

/// Scientific notation with `significant` digits, rounded half to even,
/// e.g. "4.168515213e+78". Requires x >= 0.
std::string to_scientific_string( const big_count& x, unsigned significant = 10 );

/// 2^e as an exact integer (built by shifting, never through floating point).
big_count pow2( unsigned long e );

big_count binomial( unsigned long n, unsigned long k );

} // namespace canalis
