#pragma once

#include <stdexcept>
#include <string>

namespace wph {

// A family whose singularities fall outside the supported setting of
// transverse-A1 curves plus avoided point strata.
struct UnsupportedSingularityError : std::runtime_error {
  explicit UnsupportedSingularityError(const std::string& what)
      : std::runtime_error(what) {}
};

// An enumeration would exceed its configured cap.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// Arithmetic between polynomials over different weight systems.
struct WeightMismatchError : std::invalid_argument {
  explicit WeightMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A requested geometric model does not apply: no plane-curve model for a
// stratum, a cover that is not Calabi-Yau, or a degenerate c2 form.
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wph
