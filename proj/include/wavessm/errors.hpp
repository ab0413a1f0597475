#pragma once

#include <stdexcept>
#include <string>

namespace wavessm {

// Domain errors map to CLI exit code 1; usage errors to exit code 2.
struct InvalidDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// phase_solution hit a propagated state with |x_i| = 0; log-modulus undefined.
struct SingularModulus : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateMargin : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedTask : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wavessm
