#pragma once

#include <stdexcept>
#include <string>

namespace dqw {

// Caller supplied an invalid argument (out-of-range coordinate, mismatched
// dimension, malformed parameter).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Lattice geometry that cannot host the two-coloured hypercube partition
// (an odd side length, or no sites at all).
class GeometryError : public InputError {
public:
    using InputError::InputError;
};

// A matrix violated an algebraic identity it is required to satisfy.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation outside a function's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Ring positions cannot be unwrapped: probability touches the antipode.
class UnwrapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search trace contains no qualifying first peak.
class PeakNotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A multi-run experiment failed part-way through.
class ExperimentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dqw
