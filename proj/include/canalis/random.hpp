#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace canalis
{

/*! \brief Seeded uniform bit stream.

  Backed by std::mt19937_64, whose output sequence is fixed by the C++
  standard. Words are used whole by next_word(); next_bit() consumes a word
  LSB first. Bounded integers use masked rejection rather than
  std::uniform_int_distribution (whose algorithm is implementation-defined),
  so a seed yields the same draws on every platform.
*/
class random_stream
{
public:
  explicit random_stream( std::uint64_t seed ) : engine_( seed ) {}

  std::uint64_t next_word();
  bool next_bit();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below( std::uint64_t bound );

  /// Uniform integer in [0, bound) for an arbitrary-precision bound > 0.
  mpz_class uniform_below( const mpz_class& bound );

private:
  std::mt19937_64 engine_;
  std::uint64_t bit_buffer_ = 0;
  unsigned bits_left_ = 0;
};

/*! \brief Exact Bernoulli(p) draws, 64 at a time.

  Each lane compares a lazily drawn uniform binary fraction against the binary
  expansion of p; the lane outputs 1 iff the uniform is below p. The
  expansion is generated from the exact numerator and denominator and cached.
*/
class bernoulli_words
{
public:
  explicit bernoulli_words( const mpq_class& p );

  /// 64 independent Bernoulli(p) bits.
  std::uint64_t next( random_stream& rng );

private:
  bool expansion_bit( std::size_t index );

  mpz_class remainder_;
  mpz_class den_;
  std::vector<bool> expansion_;
  bool trivial_ = false;
  std::uint64_t trivial_word_ = 0;
};

} // namespace canalis
