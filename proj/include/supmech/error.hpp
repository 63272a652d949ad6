#pragma once

#include <stdexcept>
#include <string>

namespace supmech {

// All recoverable failures in the library throw Error.  `pos` is a byte
// offset into the offending input when there is one (expression text,
// config file), or -1 otherwise.  The CLI maps these to exit codes.
struct Error : std::runtime_error {
  long pos = -1;
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  Error(const std::string& msg, long position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

// A scenario or parameter that violates the config schema: unknown suite or
// key, malformed value, missing mandatory seed.  Exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

// A filesystem operation that failed (unreadable config, unwritable output
// directory).  Exit code 3.
struct IoError : Error {
  using Error::Error;
};

}  // namespace supmech
