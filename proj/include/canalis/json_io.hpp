#pragma once

#include <canalis/generator.hpp>
#include <canalis/oracle.hpp>
#include <canalis/probability.hpp>
#include <canalis/truth_table.hpp>

#include <json.hpp>

namespace canalis
{

/// Version of every JSON document emitted by the library and the CLI.
inline constexpr int format_version = 1;

nlohmann::json to_json( const canalizing_profile& profile );
nlohmann::json to_json( const draw_record& record );
nlohmann::json to_json( const class_census& census );
nlohmann::json to_json( const prob_breakdown_t& breakdown, unsigned digits = 0 );

/// {"fraction": "a/b"} plus "decimal" when digits > 0.
nlohmann::json prob_json( const exact_prob& x, unsigned digits );

class_census census_from_json( const nlohmann::json& doc );

} // namespace canalis
