#pragma once

#include <stdexcept>
#include <string>

namespace rcbf {

/// Malformed configuration or input files. The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failures (non-convergence, out-of-domain evaluation, degenerate
/// meshes). The CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rcbf
