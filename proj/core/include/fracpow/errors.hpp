#pragma once

#include <stdexcept>
#include <string>

namespace fracpow {

/// Rejected user-supplied configuration (mesh level, quadrature parameters, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite coefficient or load data met during element integration.
struct AssemblyError : std::runtime_error {
  AssemblyError(const std::string& what, long cell_id)
      : std::runtime_error(what), cell(cell_id) {}
  long cell;
};

}  // namespace fracpow
