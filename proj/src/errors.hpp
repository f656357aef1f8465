// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace levyrank {

/// Invalid experiment document or model parameters.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simulation produced a non-finite state or was given bad inputs.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File read/write failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levyrank
