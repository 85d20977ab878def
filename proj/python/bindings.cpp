#include <canalis/errors.hpp>
#include <canalis/exact_counts.hpp>
#include <canalis/generator.hpp>
#include <canalis/json_io.hpp>
#include <canalis/oracle.hpp>
#include <canalis/probability.hpp>
#include <canalis/truth_table.hpp>
#include <canalis/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace canalis;

namespace
{

py::int_ to_py( const big_count& x )
{
  return py::reinterpret_steal<py::int_>( PyLong_FromString( x.get_str().c_str(), nullptr, 10 ) );
}

py::object to_py( const exact_prob& x )
{
  auto const fraction = py::module_::import( "fractions" ).attr( "Fraction" );
  return fraction( to_py( big_count( x.get_num() ) ), to_py( big_count( x.get_den() ) ) );
}

/// Accepts "a/b" or decimal strings, ints and fractions.Fraction.
bias to_bias( const py::object& p )
{
  if ( py::isinstance<py::str>( p ) )
    return parse_bias( p.cast<std::string>() );
  if ( py::hasattr( p, "numerator" ) && py::hasattr( p, "denominator" ) )
    return parse_bias( py::str( p.attr( "numerator" ) ).cast<std::string>() + "/" +
                       py::str( p.attr( "denominator" ) ).cast<std::string>() );
  throw usage_error( "bias must be a string, an int or a fractions.Fraction" );
}

direction to_direction( const std::string& d )
{
  if ( d == "pos" || d == "positive" )
    return direction::positive;
  if ( d == "neg" || d == "negative" )
    return direction::negative;
  throw usage_error( "direction must be 'pos' or 'neg'" );
}

py::object to_py( const nlohmann::json& doc )
{
  auto const loads = py::module_::import( "json" ).attr( "loads" );
  return loads( doc.dump() );
}

} // namespace

PYBIND11_MODULE( _canalis, m )
{
  m.doc() = "Exact counts, probabilities and sampling for canalizing Boolean functions";

  py::register_exception<usage_error>( m, "UsageError", PyExc_ValueError );
  py::register_exception<range_error>( m, "RangeError", PyExc_ValueError );
  py::register_exception<rejection_limit_exceeded>( m, "RejectionLimitExceeded", PyExc_RuntimeError );

  m.def( "count_canalizing", []( unsigned n ) { return to_py( count_canalizing( n ) ); }, py::arg( "n" ) );
  m.def( "count_exact_k", []( unsigned n, unsigned k ) { return to_py( count_exact_k( n, k ) ); }, py::arg( "n" ),
         py::arg( "k" ) );
  m.def( "count_both_ways", []( unsigned n ) { return to_py( count_both_ways( n ) ); }, py::arg( "n" ) );

  m.def(
      "prob_canalizing", []( unsigned n, const py::object& p ) { return to_py( prob_canalizing( n, to_bias( p ) ) ); },
      py::arg( "n" ), py::arg( "p" ) );
  m.def(
      "prob_both_ways", []( unsigned n, const py::object& p ) { return to_py( prob_both_ways( n, to_bias( p ) ) ); },
      py::arg( "n" ), py::arg( "p" ) );
  m.def(
      "prob_exactly_k",
      []( unsigned n, unsigned k, const py::object& p, const std::string& d ) {
        return to_py( prob_exactly_k( n, k, to_bias( p ), to_direction( d ) ) );
      },
      py::arg( "n" ), py::arg( "k" ), py::arg( "p" ), py::arg( "direction" ) = "pos" );
  m.def(
      "prob_canalizing_on_block",
      []( unsigned n, unsigned k, const py::object& p, const std::string& d ) {
        return to_py( prob_canalizing_on_block( n, k, to_bias( p ), to_direction( d ) ) );
      },
      py::arg( "n" ), py::arg( "k" ), py::arg( "p" ), py::arg( "direction" ) = "pos" );
  m.def(
      "prob_breakdown",
      []( unsigned n, const py::object& p ) {
        auto const bd = prob_breakdown( n, to_bias( p ) );
        py::dict pce, nce;
        for ( auto const& [k, v] : bd.pr_pce )
          pce[py::int_( k )] = to_py( v );
        for ( auto const& [k, v] : bd.pr_nce )
          nce[py::int_( k )] = to_py( v );
        py::dict d;
        d["canalizing"] = to_py( bd.pr_canalizing );
        d["both_ways"] = to_py( bd.pr_both_ways );
        d["pce"] = pce;
        d["nce"] = nce;
        return d;
      },
      py::arg( "n" ), py::arg( "p" ) );

  m.def(
      "classify", []( unsigned n, const std::string& hex ) { return to_py( to_json( classify( from_hex( n, hex ) ) ) ); },
      py::arg( "n" ), py::arg( "table" ) );
  m.def(
      "is_canalizing", []( unsigned n, const std::string& hex ) { return is_canalizing( from_hex( n, hex ) ); },
      py::arg( "n" ), py::arg( "table" ) );

  m.def(
      "generate",
      []( unsigned n, const py::object& p, std::size_t count, std::uint64_t seed, unsigned max_rejections,
          bool records ) -> py::object {
        generator_config config;
        config.n = n;
        config.p = to_bias( p );
        config.seed = seed;
        config.max_rejections = max_rejections;
        canalizing_generator gen( config );
        py::list tables, recs;
        for ( std::size_t i = 0; i < count; ++i )
        {
          draw_record rec;
          tables.append( to_hex( gen.next( &rec ) ) );
          if ( records )
            recs.append( to_py( to_json( rec ) ) );
        }
        if ( records )
          return py::make_tuple( tables, recs );
        return std::move( tables );
      },
      py::arg( "n" ), py::arg( "p" ), py::arg( "count" ) = 1, py::arg( "seed" ) = 0,
      py::arg( "max_rejections" ) = 10000, py::arg( "records" ) = false,
      "Hex truth tables drawn from Pr_p conditioned on being canalizing; with records=True also the draw records." );

  m.def( "census", []( unsigned n ) { return to_py( to_json( enumerate_classify( n ) ) ); }, py::arg( "n" ),
         "Exhaustive census for n <= 4, counts as decimal strings." );
  m.def(
      "verify",
      []( unsigned max_n ) {
        auto const report = verify_against_census( max_n );
        py::dict d;
        d["checks"] = report.checks.size();
        d["ok"] = report.ok();
        if ( auto const* f = report.first_failure() )
          d["first_failure"] = f->name;
        return d;
      },
      py::arg( "max_n" ) = 4 );
  m.def(
      "deep_count_n5",
      []( unsigned threads ) {
        py::gil_scoped_release release;
        return deep_count_n5( threads );
      },
      py::arg( "threads" ) = 0 );
}
