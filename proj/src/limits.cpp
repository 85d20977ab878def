#include <canalis/limits.hpp>

#include <cstdlib>
#include <string>

namespace canalis
{

caps default_caps()
{
  return caps{};
}

const caps& active_caps()
{
  static const caps value = [] {
    auto c = default_caps();
    if ( char const* env = std::getenv( "CANALIS_MAX_N" ); env && *env )
    {
      try
      {
        auto const v = std::stoul( env );
        if ( v >= 1 && v <= 62 )
        {
          c.table = c.count = c.prob = c.gen = static_cast<unsigned>( v );
        }
      }
      catch ( ... )
      {
        // unparsable override: keep defaults
      }
    }
    return c;
  }();
  return value;
}

} // namespace canalis
