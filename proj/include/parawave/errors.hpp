#pragma once

#include <stdexcept>
#include <string>

namespace parawave {

/// Base for failures of the numerics (as opposed to invalid arguments).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The argument of a rational stability function sits on (or next to) a pole.
class PoleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A propagator annihilated the mode, so the complex logarithm is undefined.
class ZeroAmplitude : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace parawave
