#pragma once

#include <stdexcept>
#include <string>

namespace hyperlw {

/// Invalid run or grid configuration (bad extents, unmatched periodic sides,
/// unsupported scheme/order combination).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state left the admissible set: non-positive density or pressure.
class PositivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite values handed to a flux or conversion routine.
class InvalidStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperlw
