#include "cli.hpp"

#include <canalis/errors.hpp>
#include <canalis/exact_counts.hpp>
#include <canalis/generator.hpp>
#include <canalis/json_io.hpp>
#include <canalis/oracle.hpp>
#include <canalis/probability.hpp>
#include <canalis/truth_table.hpp>
#include <canalis/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

namespace canalis::cli
{

using nlohmann::json;

namespace
{

json envelope( const std::string& command, json params, json result )
{
  return json{ { "command", command },
               { "format_version", format_version },
               { "params", std::move( params ) },
               { "result", std::move( result ) } };
}

void emit( std::ostream& out, const json& doc )
{
  out << doc.dump( 2 ) << '\n';
}

/* count ------------------------------------------------------------------ */

struct count_options
{
  unsigned n = 0;
  std::optional<unsigned> to;
  std::optional<unsigned> k;
  bool table = false;
  bool scientific = false;
  std::string format = "json";
};

json count_value( const big_count& c, bool scientific )
{
  json j = c.get_str();
  if ( !scientific )
    return j;
  return json{ { "exact", c.get_str() }, { "scientific", to_scientific_string( c, 10 ) } };
}

int run_count( const count_options& o, std::ostream& out )
{
  auto const last = o.to.value_or( o.n );
  if ( last < o.n )
    throw usage_error( "--to must not be below --n" );

  if ( o.format == "csv" )
  {
    auto const sci_header = o.scientific ? ",scientific\n" : "\n";
    auto cell = [&]( const big_count& c ) {
      return o.scientific ? c.get_str() + "," + to_scientific_string( c ) : c.get_str();
    };
    if ( o.table )
    {
      out << "n,k,count" << sci_header;
      for ( auto n = o.n; n <= last; ++n )
      {
        for ( unsigned k = 1; k <= n; ++k )
          out << n << ',' << k << ',' << cell( count_exact_k( n, k ) ) << '\n';
        out << n << ",total," << cell( count_canalizing( n ) ) << '\n';
      }
    }
    else
    {
      out << ( o.k ? "n,k,count" : "n,count" ) << sci_header;
      for ( auto n = o.n; n <= last; ++n )
      {
        if ( o.k )
          out << n << ',' << *o.k << ',' << cell( count_exact_k( n, *o.k ) ) << '\n';
        else
          out << n << ',' << cell( count_canalizing( n ) ) << '\n';
      }
    }
    return ok;
  }

  json params{ { "n", o.n } };
  if ( o.to )
    params["to"] = *o.to;
  if ( o.k )
    params["k"] = *o.k;
  params["table"] = o.table;

  auto one = [&]( unsigned n ) {
    json r{ { "n", n } };
    if ( o.table )
    {
      auto rows = json::array();
      for ( unsigned k = 1; k <= n; ++k )
        rows.push_back( { { "k", k }, { "count", count_value( count_exact_k( n, k ), o.scientific ) } } );
      r["rows"] = rows;
      r["total"] = count_value( count_canalizing( n ), o.scientific );
    }
    else if ( o.k )
    {
      r["k"] = *o.k;
      r["count"] = count_value( count_exact_k( n, *o.k ), o.scientific );
    }
    else
    {
      r["count"] = count_value( count_canalizing( n ), o.scientific );
    }
    return r;
  };

  json result;
  if ( o.to )
  {
    result = json::array();
    for ( auto n = o.n; n <= last; ++n )
      result.push_back( one( n ) );
  }
  else
  {
    result = one( o.n );
  }
  emit( out, envelope( "count", params, result ) );
  return ok;
}

/* prob ------------------------------------------------------------------- */

struct prob_options
{
  unsigned n = 0;
  std::optional<unsigned> to;
  std::string p;
  std::optional<unsigned> k;
  std::string dir = "both";
  unsigned digits = 0;
  bool block = false;
  bool both_ways = false;
  bool breakdown = false;
  std::string format = "json";
};

struct prob_row
{
  unsigned n;
  std::string quantity;
  exact_prob value;
};

std::vector<prob_row> prob_rows( const prob_options& o, unsigned n, const bias& b )
{
  if ( o.breakdown )
  {
    auto const bd = prob_breakdown( n, b );
    std::vector<prob_row> rows{ { n, "canalizing", bd.pr_canalizing }, { n, "both_ways", bd.pr_both_ways } };
    for ( auto const& [k, v] : bd.pr_pce )
      rows.push_back( { n, "pce_" + std::to_string( k ), v } );
    for ( auto const& [k, v] : bd.pr_nce )
      rows.push_back( { n, "nce_" + std::to_string( k ), v } );
    return rows;
  }
  if ( o.both_ways )
    return { { n, "both_ways", prob_both_ways( n, b ) } };
  if ( o.block )
  {
    auto const d = o.dir == "pos" ? direction::positive : direction::negative;
    return { { n, "block_" + o.dir + "_" + std::to_string( *o.k ), prob_canalizing_on_block( n, *o.k, b, d ) } };
  }
  if ( o.k )
  {
    auto const pos = prob_exactly_k( n, *o.k, b, direction::positive );
    auto const neg = prob_exactly_k( n, *o.k, b, direction::negative );
    auto const k = std::to_string( *o.k );
    if ( o.dir == "pos" )
      return { { n, "pce_" + k, pos } };
    if ( o.dir == "neg" )
      return { { n, "nce_" + k, neg } };
    return { { n, "pce_" + k, pos }, { n, "nce_" + k, neg }, { n, "exactly_" + k, pos + neg } };
  }
  return { { n, "canalizing", prob_canalizing( n, b ) } };
}

int run_prob( const prob_options& o, std::ostream& out )
{
  auto const b = parse_bias( o.p );
  auto const last = o.to.value_or( o.n );
  if ( last < o.n )
    throw usage_error( "--to must not be below --n" );
  if ( o.block && ( !o.k || o.dir == "both" ) )
    throw usage_error( "--block needs --k and --direction pos|neg" );

  std::vector<prob_row> rows;
  for ( auto n = o.n; n <= last; ++n )
  {
    auto more = prob_rows( o, n, b );
    rows.insert( rows.end(), more.begin(), more.end() );
  }

  if ( o.format == "csv" )
  {
    out << "n,p,quantity,fraction" << ( o.digits ? ",decimal" : "" ) << '\n';
    for ( auto const& r : rows )
    {
      out << r.n << ',' << to_fraction_string( b.value() ) << ',' << r.quantity << ',' << to_fraction_string( r.value );
      if ( o.digits )
        out << ',' << to_decimal_string( r.value, o.digits );
      out << '\n';
    }
    return ok;
  }

  json params{ { "n", o.n }, { "p", to_fraction_string( b.value() ) }, { "direction", o.dir }, { "digits", o.digits } };
  if ( o.to )
    params["to"] = *o.to;
  if ( o.k )
    params["k"] = *o.k;
  params["block"] = o.block;
  params["both_ways"] = o.both_ways;
  params["breakdown"] = o.breakdown;

  json result;
  if ( o.breakdown && !o.to )
  {
    result = to_json( prob_breakdown( o.n, b ), o.digits );
  }
  else
  {
    result = json::array();
    for ( auto const& r : rows )
    {
      auto entry = prob_json( r.value, o.digits );
      entry["n"] = r.n;
      entry["quantity"] = r.quantity;
      result.push_back( entry );
    }
    if ( result.size() == 1 )
      result = result[0];
  }
  emit( out, envelope( "prob", params, result ) );
  return ok;
}

/* classify --------------------------------------------------------------- */

int run_classify( unsigned n, const std::string& hex, std::ostream& out )
{
  auto const table = from_hex( n, hex );
  auto result = to_json( classify( table ) );
  result["hex"] = to_hex( table );
  emit( out, envelope( "classify", { { "n", n }, { "table", hex } }, result ) );
  return ok;
}

/* generate --------------------------------------------------------------- */

struct generate_options
{
  unsigned n = 0;
  std::string p;
  std::uint64_t count = 1;
  std::optional<std::uint64_t> seed;
  unsigned max_rejections = 10000;
  std::string records;
  std::string format = "text";
};

int run_generate( const generate_options& o, std::ostream& out, std::ostream& err )
{
  generator_config config;
  config.n = o.n;
  config.p = parse_bias( o.p );
  config.max_rejections = o.max_rejections;
  if ( o.seed )
  {
    config.seed = *o.seed;
  }
  else
  {
    std::random_device device;
    config.seed = ( std::uint64_t{ device() } << 32 ) | device();
    err << "seed: " << config.seed << '\n';
  }

  canalizing_generator gen( config );
  json params{ { "n", o.n },
               { "p", to_fraction_string( config.p.value() ) },
               { "count", o.count },
               { "seed", config.seed },
               { "max_rejections", o.max_rejections } };

  auto tables = json::array();
  auto records = json::array();
  bool const want_records = !o.records.empty() || o.format == "json";
  for ( std::uint64_t i = 0; i < o.count; ++i )
  {
    draw_record rec;
    auto const table = gen.next( &rec );
    auto hex = to_hex( table );
    if ( o.format == "json" )
      tables.push_back( hex );
    else
      out << hex << '\n';
    if ( want_records )
      records.push_back( to_json( rec ) );
  }

  if ( o.format == "json" )
    emit( out, envelope( "generate", params, { { "tables", tables }, { "records", records } } ) );

  if ( !o.records.empty() )
  {
    std::ofstream file( o.records );
    if ( !file )
      throw usage_error( "cannot write records to '" + o.records + "'" );
    file << envelope( "generate", params, { { "records", records } } ).dump( 2 ) << '\n';
  }
  return ok;
}

/* verify ----------------------------------------------------------------- */

int run_verify( unsigned max_n, bool deep, unsigned threads, std::ostream& out, std::ostream& err )
{
  constexpr std::uint64_t expected_n5 = 1292276;

  auto const report = verify_against_census( max_n );
  json result{ { "checks", report.checks.size() } };
  std::size_t passed = 0;
  for ( auto const& c : report.checks )
    passed += c.passed;
  result["passed"] = passed;

  bool all_ok = report.ok();
  if ( auto const* f = report.first_failure() )
  {
    result["first_failure"] = { { "name", f->name }, { "oracle", f->expected }, { "closed_form", f->actual } };
  }

  if ( deep )
  {
    auto const start = std::chrono::steady_clock::now();
    auto last_report = start;
    auto const count = deep_count_n5( threads, [&]( std::uint64_t done, std::uint64_t total ) {
      auto const now = std::chrono::steady_clock::now();
      if ( now - last_report > std::chrono::seconds( 2 ) || done == total )
      {
        err << "deep n=5: " << ( 100 * done / total ) << "%\n";
        last_report = now;
      }
    } );
    auto const seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
    bool const pass = count == expected_n5;
    result["deep_n5"] = { { "count", std::to_string( count ) },
                          { "expected", std::to_string( expected_n5 ) },
                          { "pass", pass },
                          { "seconds", seconds } };
    if ( !pass && all_ok )
    {
      result["first_failure"] = {
          { "name", "n=5 deep count" }, { "oracle", std::to_string( count ) }, { "closed_form", std::to_string( expected_n5 ) } };
    }
    all_ok = all_ok && pass;
  }
  result["ok"] = all_ok;

  emit( out, envelope( "verify", { { "max_n", max_n }, { "deep_n5", deep } }, result ) );
  return all_ok ? ok : mismatch;
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Exact counts, probabilities, classification and generation of canalizing Boolean functions", "canalis" };
  app.require_subcommand( 1 );

  auto const format_check = CLI::IsMember( { "json", "csv" } );

  count_options co;
  auto* count = app.add_subcommand( "count", "Number of canalizing functions (or of those canalizing on exactly k variables)" );
  count->add_option( "--n", co.n, "Number of variables" )->required();
  count->add_option( "--to", co.to, "Sweep n up to this value" );
  count->add_option( "--k", co.k, "Exactly k canalizing variables" );
  count->add_flag( "--table", co.table, "Rows for k = 1..n plus the total" );
  count->add_flag( "--scientific", co.scientific, "Add a 10-significant-digit scientific form" );
  count->add_option( "--format", co.format, "json or csv" )->check( format_check );

  prob_options po;
  auto* prob = app.add_subcommand( "prob", "Exact probabilities under bias p" );
  prob->add_option( "--n", po.n, "Number of variables" )->required();
  prob->add_option( "--to", po.to, "Sweep n up to this value" );
  prob->add_option( "--p", po.p, "Bias as a/b or a finite decimal" )->required();
  prob->add_option( "--k", po.k, "Exactly k canalizing variables (or block size with --block)" );
  prob->add_option( "--direction", po.dir, "pos, neg or both" )->check( CLI::IsMember( { "pos", "neg", "both" } ) );
  prob->add_option( "--digits", po.digits, "Also print a decimal rounded to this many digits" );
  prob->add_flag( "--block", po.block, "Nonconstant functions canalizing on the block {0..k-1}" );
  prob->add_flag( "--both-ways", po.both_ways, "Probability of the both-ways class" );
  prob->add_flag( "--breakdown", po.breakdown, "All categories" );
  prob->add_option( "--format", po.format, "json or csv" )->check( format_check );

  unsigned cn = 0;
  std::string hex;
  auto* cls = app.add_subcommand( "classify", "Canalizing profile of one truth table" );
  cls->add_option( "--n", cn, "Number of variables" )->required();
  cls->add_option( "table,--table", hex, "Truth table as hex, most significant digit first" )->required();

  generate_options go;
  auto* gen = app.add_subcommand( "generate", "Random canalizing functions" );
  gen->add_option( "--n", go.n, "Number of variables" )->required();
  gen->add_option( "--p", go.p, "Bias as a/b or a finite decimal" )->required();
  gen->add_option( "--count", go.count, "Number of functions" );
  gen->add_option( "--seed", go.seed, "Seed; drawn from system entropy and printed when absent" );
  gen->add_option( "--max-rejections", go.max_rejections, "Consecutive rejections before giving up" );
  gen->add_option( "--records", go.records, "Write draw records as JSON to this file" );
  gen->add_option( "--format", go.format, "text (one hex table per line) or json" )
      ->check( CLI::IsMember( { "text", "json" } ) );

  unsigned max_n = 4;
  bool deep = false;
  unsigned threads = 0;
  auto* ver = app.add_subcommand( "verify", "Cross-check closed forms against exhaustive enumeration" );
  ver->add_option( "--max-n", max_n, "Largest n to enumerate (1..4)" )->check( CLI::Range( 1u, 4u ) );
  ver->add_flag( "--deep-n5", deep, "Also enumerate all 2^32 five-variable functions" );
  ver->add_option( "--threads", threads, "Worker threads for --deep-n5 (0 = all cores)" );

  std::vector<const char*> argv;
  for ( auto const& a : args )
    argv.push_back( a.c_str() );

  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( const CLI::ParseError& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? ok : usage;
  }

  try
  {
    if ( *count )
      return run_count( co, out );
    if ( *prob )
      return run_prob( po, out );
    if ( *cls )
      return run_classify( cn, hex, out );
    if ( *gen )
      return run_generate( go, out, err );
    if ( *ver )
      return run_verify( max_n, deep, threads, out, err );
  }
  catch ( const usage_error& e )
  {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  catch ( const range_error& e )
  {
    err << "error: " << e.what() << '\n';
    return range;
  }
  catch ( const rejection_limit_exceeded& e )
  {
    err << "error: " << e.what() << '\n';
    return starvation;
  }
  return usage;
}

} // namespace canalis::cli
