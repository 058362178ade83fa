#pragma once

#include <stdexcept>

namespace corbit {

// Malformed algebra file or other unparsable input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector/matrix sizes inconsistent with the algebra dimension.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A matrix that must be inverted is numerically singular.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group element or curve parameter outside the coset chart.
struct ChartBoundaryError : std::domain_error {
  using std::domain_error::domain_error;
};

// Non-finite values produced while integrating.
struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State violating its manifold constraints beyond tolerance.
struct InvalidStateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Inconsistent run configuration (CLI flag combinations, file modes).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace corbit
