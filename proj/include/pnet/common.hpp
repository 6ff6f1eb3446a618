#ifndef PNET_COMMON_HPP
#define PNET_COMMON_HPP

#include <stdexcept>
#include <string>

namespace pnet {

// Absolute tolerance used by all normalization and degree-equality checks.
inline constexpr double kDegreeTolerance = 1e-9;

// Raised for every input- or contract-level violation: malformed files,
// domain mismatches, out-of-range degrees, impossible evidence, cycles.
// The C API maps it to PNET_ERR_INVALID and the CLI to exit code 2;
// anything else escaping the library is treated as an internal error.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pnet

#endif  // PNET_COMMON_HPP
