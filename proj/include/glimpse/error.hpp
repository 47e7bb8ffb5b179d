#pragma once

#include <stdexcept>
#include <string>

namespace glimpse {

// Invalid usage or malformed input: bad shapes, bad config keys, bad files.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values where finite ones are required.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace glimpse
