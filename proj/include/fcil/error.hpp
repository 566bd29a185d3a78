#pragma once

#include <stdexcept>
#include <string>

namespace fcil {

// Invalid thresholds or options supplied by the caller.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unreadable input.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force reference routine refused an input above its enumeration cap.
class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace fcil
