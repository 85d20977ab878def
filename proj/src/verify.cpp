#include <canalis/errors.hpp>
#include <canalis/exact_counts.hpp>
#include <canalis/limits.hpp>
#include <canalis/oracle.hpp>
#include <canalis/probability.hpp>
#include <canalis/verify.hpp>

#include <algorithm>

namespace canalis
{

bool verification_report::ok() const
{
  return std::all_of( checks.begin(), checks.end(), []( auto const& c ) { return c.passed; } );
}

const check_result* verification_report::first_failure() const
{
  for ( auto const& c : checks )
  {
    if ( !c.passed )
      return &c;
  }
  return nullptr;
}

std::vector<exact_prob> standard_biases()
{
  return { exact_prob( 1, 10 ), exact_prob( 1, 4 ), exact_prob( 1, 2 ), exact_prob( 3, 5 ), exact_prob( 9, 10 ) };
}

namespace
{

void record_count( verification_report& report, std::string name, const big_count& oracle, const big_count& formula )
{
  report.checks.push_back( { std::move( name ), oracle.get_str(), formula.get_str(), oracle == formula } );
}

void record_prob( verification_report& report, std::string name, const exact_prob& oracle, const exact_prob& formula )
{
  report.checks.push_back(
      { std::move( name ), to_fraction_string( oracle ), to_fraction_string( formula ), oracle == formula } );
}

} // namespace

verification_report verify_against_census( unsigned max_n, const std::vector<exact_prob>& biases )
{
  if ( max_n < 1 || max_n > max_enumeration_vars )
    throw usage_error( "verification supports max_n in [1, 4]" );

  verification_report report;
  for ( unsigned n = 1; n <= max_n; ++n )
  {
    auto const census = enumerate_classify( n );
    auto const tag = "n=" + std::to_string( n );

    record_count( report, tag + " count_canalizing", census.canalizing, count_canalizing( n ) );
    for ( unsigned k = 1; k <= n; ++k )
    {
      record_count( report, tag + " count_exact_k k=" + std::to_string( k ), census.by_exact_k.at( k ),
                    count_exact_k( n, k ) );
    }
    record_count( report, tag + " count_both_ways", census.both_ways, count_both_ways( n ) );

    for ( auto const& p : biases )
    {
      bias const b( p );
      auto const ptag = tag + " p=" + to_fraction_string( p );
      record_prob( report, ptag + " prob_canalizing", prob_from_census( census, p ), prob_canalizing( n, b ) );
      record_prob( report, ptag + " prob_both_ways", prob_both_ways_from_census( census, p ), prob_both_ways( n, b ) );
      for ( unsigned k = 1; k <= n; ++k )
      {
        auto const ktag = ptag + " k=" + std::to_string( k );
        record_prob( report, ktag + " prob_exactly_k positive", prob_exactly_k_from_census( census, k, true, p ),
                     prob_exactly_k( n, k, b, direction::positive ) );
        record_prob( report, ktag + " prob_exactly_k negative", prob_exactly_k_from_census( census, k, false, p ),
                     prob_exactly_k( n, k, b, direction::negative ) );
      }
    }
  }
  return report;
}

} // namespace canalis
