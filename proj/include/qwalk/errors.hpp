// qwalk - error types shared across the library
#ifndef QWALK_ERRORS_HPP_
#define QWALK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qwalk {

// Invalid configuration (bad parameter combinations, grids that cannot hold
// the requested initial data, ...). The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// CFL violation in the transport solver. A configuration error by nature,
// but reported by the CLI as a tripped runtime guard (exit code 3).
class CflError : public ConfigError {
 public:
  explicit CflError(const std::string& what) : ConfigError(what) {}
};

// A runtime guard tripped mid-run (e.g. probability reached the lattice
// boundary). The CLI maps this to exit code 3.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qwalk

#endif  // QWALK_ERRORS_HPP_
