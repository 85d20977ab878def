#include <canalis/errors.hpp>
#include <canalis/json_io.hpp>

#include <string>

namespace canalis
{

using nlohmann::json;

namespace
{

json inputs_json( const std::vector<canalizing_input>& inputs )
{
  auto out = json::array();
  for ( auto const& c : inputs )
    out.push_back( { { "variable", c.variable }, { "value", c.value ? 1 : 0 } } );
  return out;
}

template<typename Key>
json count_map_json( const std::map<Key, big_count>& m )
{
  auto out = json::object();
  for ( auto const& [key, value] : m )
    out[std::to_string( key )] = value.get_str();
  return out;
}

json pair_map_json( const std::map<std::pair<unsigned, unsigned>, big_count>& m )
{
  auto out = json::object();
  for ( auto const& [key, value] : m )
    out[std::to_string( key.first )][std::to_string( key.second )] = value.get_str();
  return out;
}

big_count parse_count( const json& j )
{
  auto const text = j.get<std::string>();
  big_count v;
  if ( text.empty() || v.set_str( text, 10 ) != 0 )
    throw usage_error( "census count '" + text + "' is not a decimal integer" );
  return v;
}

std::map<unsigned, big_count> parse_count_map( const json& j )
{
  std::map<unsigned, big_count> out;
  for ( auto const& [key, value] : j.items() )
    out[static_cast<unsigned>( std::stoul( key ) )] = parse_count( value );
  return out;
}

std::map<std::pair<unsigned, unsigned>, big_count> parse_pair_map( const json& j )
{
  std::map<std::pair<unsigned, unsigned>, big_count> out;
  for ( auto const& [k, inner] : j.items() )
  {
    for ( auto const& [w, value] : inner.items() )
      out[{ static_cast<unsigned>( std::stoul( k ) ), static_cast<unsigned>( std::stoul( w ) ) }] = parse_count( value );
  }
  return out;
}

} // namespace

json to_json( const canalizing_profile& profile )
{
  json j;
  j["n"] = profile.num_vars;
  j["is_canalizing"] = profile.is_canalizing();
  j["positive"] = inputs_json( profile.positive );
  j["negative"] = inputs_json( profile.negative );
  j["both_ways_variable"] = profile.both_ways_variable ? json( *profile.both_ways_variable ) : json( nullptr );
  j["constant"] = profile.constant_value ? json( *profile.constant_value ? 1 : 0 ) : json( nullptr );
  j["num_canalizing_vars"] = profile.num_canalizing_vars;
  return j;
}

json to_json( const draw_record& record )
{
  json j;
  j["q"] = record.q;
  j["r"] = record.r ? 1 : 0;
  j["subset"] = record.subset;
  auto s = json::array();
  for ( bool v : record.forcing_values )
    s.push_back( v ? 1 : 0 );
  j["s"] = s;
  j["bc_variable"] = record.bc_variable ? json( *record.bc_variable ) : json( nullptr );
  j["rejections"] = record.rejections;
  return j;
}

json to_json( const class_census& census )
{
  json j;
  j["format_version"] = format_version;
  j["n"] = census.n;
  j["total_functions"] = census.total_functions.get_str();
  j["canalizing"] = census.canalizing.get_str();
  j["both_ways"] = census.both_ways.get_str();
  j["by_exact_k"] = count_map_json( census.by_exact_k );
  j["pce_by_k"] = count_map_json( census.pce_by_k );
  j["nce_by_k"] = count_map_json( census.nce_by_k );
  j["weight_enum_canalizing"] = count_map_json( census.weight_enum_canalizing );
  j["weight_enum_both_ways"] = count_map_json( census.weight_enum_both_ways );
  j["weight_enum_pce"] = pair_map_json( census.weight_enum_pce );
  j["weight_enum_nce"] = pair_map_json( census.weight_enum_nce );
  return j;
}

class_census census_from_json( const json& doc )
{
  try
  {
    class_census c;
    c.n = doc.at( "n" ).get<unsigned>();
    c.total_functions = parse_count( doc.at( "total_functions" ) );
    c.canalizing = parse_count( doc.at( "canalizing" ) );
    c.both_ways = parse_count( doc.at( "both_ways" ) );
    c.by_exact_k = parse_count_map( doc.at( "by_exact_k" ) );
    c.pce_by_k = parse_count_map( doc.at( "pce_by_k" ) );
    c.nce_by_k = parse_count_map( doc.at( "nce_by_k" ) );
    c.weight_enum_canalizing = parse_count_map( doc.at( "weight_enum_canalizing" ) );
    c.weight_enum_both_ways = parse_count_map( doc.at( "weight_enum_both_ways" ) );
    c.weight_enum_pce = parse_pair_map( doc.at( "weight_enum_pce" ) );
    c.weight_enum_nce = parse_pair_map( doc.at( "weight_enum_nce" ) );
    return c;
  }
  catch ( const json::exception& e )
  {
    throw usage_error( std::string( "malformed census document: " ) + e.what() );
  }
}

json prob_json( const exact_prob& x, unsigned digits )
{
  json j;
  j["fraction"] = to_fraction_string( x );
  if ( digits > 0 )
    j["decimal"] = to_decimal_string( x, digits );
  return j;
}

json to_json( const prob_breakdown_t& b, unsigned digits )
{
  json j;
  j["n"] = b.n;
  j["p"] = to_fraction_string( b.p );
  j["pr_canalizing"] = prob_json( b.pr_canalizing, digits );
  j["pr_both_ways"] = prob_json( b.pr_both_ways, digits );
  auto pce = json::object();
  auto nce = json::object();
  for ( auto const& [k, v] : b.pr_pce )
    pce[std::to_string( k )] = prob_json( v, digits );
  for ( auto const& [k, v] : b.pr_nce )
    nce[std::to_string( k )] = prob_json( v, digits );
  j["pr_pce"] = pce;
  j["pr_nce"] = nce;
  return j;
}

} // namespace canalis
