#pragma once

#include <stdexcept>
#include <string>

namespace quasiradial {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QUASIRADIAL_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// exponent calculus
QUASIRADIAL_ERROR(InvalidDims);
QUASIRADIAL_ERROR(GammaSingular);
QUASIRADIAL_ERROR(InvalidAsymptotics);
QUASIRADIAL_ERROR(BoundaryCase);
QUASIRADIAL_ERROR(NotAdmissible);

// potentials
QUASIRADIAL_ERROR(InvalidPotential);
QUASIRADIAL_ERROR(NonPositive);
QUASIRADIAL_ERROR(InsufficientRange);
QUASIRADIAL_ERROR(DivisionByZeroV);

// grids, solver, probes
QUASIRADIAL_ERROR(BadRange);
QUASIRADIAL_ERROR(NoProjection);
QUASIRADIAL_ERROR(Degenerate);
QUASIRADIAL_ERROR(TooFewSamples);

// configuration
QUASIRADIAL_ERROR(ConfigError);

#undef QUASIRADIAL_ERROR

}  // namespace quasiradial
