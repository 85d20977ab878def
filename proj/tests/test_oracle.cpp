#include <canalis/errors.hpp>
#include <canalis/exact_counts.hpp>
#include <canalis/json_io.hpp>
#include <canalis/oracle.hpp>
#include <canalis/probability.hpp>
#include <canalis/verify.hpp>

#include "brute.hpp"

#include <doctest.h>

#include <random>

using namespace canalis;

TEST_CASE( "census examples" )
{
  auto const two = enumerate_classify( 2 );
  CHECK( two.total_functions == 16 );
  CHECK( two.canalizing == 14 );
  CHECK( two.by_exact_k == std::map<unsigned, big_count>{ { 1, 4 }, { 2, 10 } } );
  CHECK( two.both_ways == 4 );
  CHECK( two.weight_enum_canalizing ==
         std::map<unsigned, big_count>{ { 0, 1 }, { 1, 4 }, { 2, 4 }, { 3, 4 }, { 4, 1 } } );

  auto const three = enumerate_classify( 3 );
  CHECK( three.canalizing == 120 );
  CHECK( three.by_exact_k == std::map<unsigned, big_count>{ { 1, 78 }, { 2, 24 }, { 3, 18 } } );

  CHECK_THROWS_AS( enumerate_classify( 0 ), range_error );
  CHECK_THROWS_AS( enumerate_classify( 5 ), range_error );
}

TEST_CASE( "census invariants and agreement with the naive classifier" )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    auto const c = enumerate_classify( n );
    big_count sum_k = 0, sum_classes = c.both_ways, sum_w = 0;
    for ( auto const& [k, v] : c.by_exact_k )
      sum_k += v;
    for ( unsigned k = 1; k <= n; ++k )
      sum_classes += c.pce_by_k.at( k ) + c.nce_by_k.at( k );
    for ( auto const& [w, v] : c.weight_enum_canalizing )
      sum_w += v;
    CHECK( sum_k == c.canalizing );
    CHECK( sum_classes == c.canalizing );
    CHECK( sum_w == c.canalizing );
    CHECK( c.both_ways == 2 * n );

    auto const t = brute::tally( n, mpq_class( 1, 2 ) );
    CHECK( c.canalizing == t.count );
    for ( unsigned k = 1; k <= n; ++k )
      CHECK( c.by_exact_k.at( k ) == t.exact_k[k] );

    CHECK( c.canalizing == count_canalizing( n ) );
    for ( unsigned k = 1; k <= n; ++k )
      CHECK( c.by_exact_k.at( k ) == count_exact_k( n, k ) );
  }
}

TEST_CASE( "probabilities from the census" )
{
  CHECK( prob_from_census( enumerate_classify( 2 ), exact_prob( 1, 2 ) ) == exact_prob( 7, 8 ) );
  CHECK( prob_from_census( enumerate_classify( 2 ), exact_prob( 1, 4 ) ) == exact_prob( 119, 128 ) );
  auto const one = enumerate_classify( 1 );
  for ( auto p : { exact_prob( 0 ), exact_prob( 2, 9 ), exact_prob( 1 ) } )
    CHECK( prob_from_census( one, p ) == 1 );

  for ( unsigned n = 1; n <= 4; ++n )
  {
    auto const c = enumerate_classify( n );
    for ( auto const& p : standard_biases() )
    {
      auto const t = brute::tally( n, p );
      CHECK( prob_from_census( c, p ) == t.canalizing );
      CHECK( prob_both_ways_from_census( c, p ) == t.both_ways );
      for ( unsigned k = 1; k <= n; ++k )
      {
        CHECK( prob_exactly_k_from_census( c, k, true, p ) == t.pce[k] );
        CHECK( prob_exactly_k_from_census( c, k, false, p ) == t.nce[k] );
      }
    }
  }
}

TEST_CASE( "complementation maps PCE_k onto NCE_k" )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    auto const c = enumerate_classify( n );
    auto const size = 1u << n;
    CHECK( c.pce_by_k == c.nce_by_k );
    for ( auto const& [key, v] : c.weight_enum_pce )
      CHECK( c.weight_enum_nce.at( { key.first, size - key.second } ) == v );
    for ( auto const& [w, v] : c.weight_enum_both_ways )
      CHECK( c.weight_enum_both_ways.at( size - w ) == v );
    for ( auto const& [w, v] : c.weight_enum_canalizing )
      CHECK( c.weight_enum_canalizing.at( size - w ) == v );
  }
}

TEST_CASE( "partial censuses merge to the full census" )
{
  auto const full = enumerate_classify( 4 );
  auto merged = enumerate_classify_range( 4, 40000, 65536 );
  merged.merge( enumerate_classify_range( 4, 0, 12345 ) );
  merged.merge( enumerate_classify_range( 4, 12345, 40000 ) );
  CHECK( merged == full );
}

TEST_CASE( "census JSON round trip" )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    auto const c = enumerate_classify( n );
    auto const doc = to_json( c );
    CHECK( doc.at( "canalizing" ).is_string() );
    CHECK( census_from_json( nlohmann::json::parse( doc.dump() ) ) == c );
  }
  CHECK_THROWS_AS( census_from_json( nlohmann::json::parse( R"({"n": 2})" ) ), usage_error );
}

TEST_CASE( "five-variable word test" )
{
  std::mt19937_64 gen( 2024 );
  for ( int i = 0; i < 20000; ++i )
  {
    auto word = static_cast<std::uint32_t>( gen() );
    // bias some samples towards canalizing words
    if ( i % 2 )
      word |= static_cast<std::uint32_t>( gen() ) | static_cast<std::uint32_t>( gen() );
    auto const expected = is_canalizing( table_from_word( 5, word ) );
    CHECK( is_canalizing_word5( word ) == expected );
    CHECK( is_canalizing_word5( ~word ) == expected );
  }
  CHECK( is_canalizing_word5( 0 ) );
  CHECK( is_canalizing_word5( 0xffffffffu ) );
  CHECK( is_canalizing_word5( 0xaaaaaaaau ) ); // x0
  CHECK_FALSE( is_canalizing_word5( 0x96696996u ) ); // parity
}

TEST_CASE( "deep count over a partial range is repeatable" )
{
  auto const first = deep_count_range( 0, 1u << 16 );
  CHECK( first == deep_count_range( 0, 1u << 16 ) );
  std::uint64_t brute_count = 0;
  for ( std::uint32_t w = 0; w < ( 1u << 16 ); ++w )
    brute_count += is_canalizing( table_from_word( 5, w ) );
  CHECK( first == brute_count );
  CHECK( deep_count_range( 0, 1000 ) + deep_count_range( 1000, 1u << 16 ) == first );
}

TEST_CASE( "verify_against_census" )
{
  auto const report = verify_against_census( 4 );
  CHECK( report.ok() );
  CHECK( report.first_failure() == nullptr );
  CHECK( report.checks.size() > 100 );
  CHECK_THROWS_AS( verify_against_census( 5 ), usage_error );
  CHECK_THROWS_AS( verify_against_census( 0 ), usage_error );
}
