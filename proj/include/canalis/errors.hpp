#pragma once

#include <stdexcept>
#include <string>

namespace canalis
{

/// Malformed input: unparsable text, wrong table length, bad hex digit.
class usage_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input whose value lies outside the supported domain.
class range_error : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

/// The generator hit its consecutive-rejection guard.
class rejection_limit_exceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace canalis
