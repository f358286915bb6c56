#pragma once

#include <stdexcept>
#include <string>

namespace invnls {

/// Bad user input: malformed config, out-of-range flags, mismatched grids.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed to converge or produced non-finite data.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace invnls
