#pragma once

#include <stdexcept>
#include <string>

namespace effver {

struct TypeError : std::runtime_error {
  using runtime_error::runtime_error;
};

struct UnboundVariable : std::runtime_error {
  using runtime_error::runtime_error;
};

struct CarrierTooLarge : std::runtime_error {
  using runtime_error::runtime_error;
};

struct ShapeMismatch : std::runtime_error {
  using runtime_error::runtime_error;
};

struct ObservationMismatch : std::runtime_error {
  using runtime_error::runtime_error;
};

struct InputExhausted : std::runtime_error {
  using runtime_error::runtime_error;
};

struct UnhandledOp : std::runtime_error {
  using runtime_error::runtime_error;
};

struct AlgebraLawViolation : std::runtime_error {
  using runtime_error::runtime_error;
};

struct NonTermination : std::runtime_error {
  using runtime_error::runtime_error;
};

struct UnsupportedShape : std::runtime_error {
  using runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using runtime_error::runtime_error;
};

struct UnknownObservation : std::runtime_error {
  using runtime_error::runtime_error;
};

} // namespace effver
