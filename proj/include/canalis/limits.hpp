#pragma once

namespace canalis
{

/// Upper bounds on the variable count accepted by each module.
///
/// The defaults keep memory and latency predictable. Setting the environment
/// variable CANALIS_MAX_N to a positive integer replaces every cap with that
/// value; it is read once, on first use.
struct caps
{
  unsigned table = 24;
  unsigned count = 24;
  unsigned prob = 16;
  unsigned gen = 16;
};

caps default_caps();

/// Caps in effect for this process (defaults, possibly overridden by the environment).
const caps& active_caps();

/// Largest n for which exhaustive enumeration is supported.
inline constexpr unsigned max_enumeration_vars = 4;

} // namespace canalis
