#pragma once

#include <stdexcept>
#include <string>

namespace erasplit {

// Malformed input: unreadable files, bad CSV cells, dimension mismatches,
// unknown model format versions.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration value. The message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace erasplit
