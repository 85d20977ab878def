#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include <canalis/generator.hpp>
#include <canalis/truth_table.hpp>

#include <boost/math/distributions/chi_squared.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace support
{

/// Empty string when the record describes the table, otherwise the reason.
inline std::string record_mismatch( const canalis::truth_table& table, const canalis::draw_record& rec )
{
  using canalis::direction;
  auto const profile = canalis::classify( table );
  if ( !profile.is_canalizing() )
    return "not canalizing";
  if ( rec.subset.size() != rec.q || rec.forcing_values.size() != rec.q )
    return "subset size differs from q";

  if ( rec.q == 0 )
  {
    if ( !rec.bc_variable || profile.both_ways_variable != rec.bc_variable )
      return "both-ways variable differs";
    // projection: f = x_i, so x_i = 1 forces 1
    if ( table.num_vars() > 0 && profile.forcing_value( *rec.bc_variable, direction::positive ) != rec.r )
      return "both-ways orientation differs";
    return {};
  }

  auto const forced = rec.r ? direction::positive : direction::negative;
  auto const other = rec.r ? direction::negative : direction::positive;
  std::uint32_t mask = 0;
  for ( auto i : rec.subset )
    mask |= std::uint32_t{ 1 } << i;

  if ( profile.is_constant() )
  {
    if ( rec.q != table.num_vars() || *profile.constant_value != rec.r )
      return "unexpected constant";
    return {};
  }
  if ( profile.variables( forced ) != mask )
    return "canalizing set differs from S";
  if ( profile.variables( other ) != 0 )
    return "canalizing in the other direction";
  for ( std::size_t j = 0; j < rec.subset.size(); ++j )
    if ( profile.forcing_value( rec.subset[j], forced ) != rec.forcing_values[j] )
      return "forcing value differs";
  return {};
}

/// Pearson statistic of observed counts against expected probabilities
/// (keys absent from `observed` count as zero).
template<typename Key>
double chi_square( const std::map<Key, std::uint64_t>& observed, const std::map<Key, double>& expected, std::uint64_t draws )
{
  double stat = 0;
  for ( auto const& [key, prob] : expected )
  {
    auto const it = observed.find( key );
    double const o = it == observed.end() ? 0.0 : static_cast<double>( it->second );
    double const e = prob * static_cast<double>( draws );
    stat += ( o - e ) * ( o - e ) / e;
  }
  return stat;
}

inline double chi_square_critical( unsigned dof, double quantile = 0.999 )
{
  return boost::math::quantile( boost::math::chi_squared( dof ), quantile );
}

} // namespace support
