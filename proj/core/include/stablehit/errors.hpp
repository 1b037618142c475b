#ifndef STABLEHIT_ERRORS_HPP
#define STABLEHIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stablehit {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid parameter or argument outside its admissible range.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation at (or too close to) a pole of a gamma function or of the
// Mellin transform.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Argument outside the vertical strip on which a transform is defined.
class StripError : public Error {
public:
    explicit StripError(const std::string& msg) : Error(msg) {}
};

// A requested tolerance cannot be met within the configured guards.
class ToleranceError : public Error {
public:
    explicit ToleranceError(const std::string& msg) : Error(msg) {}
};

// A series representation was invoked with the wrong alpha classification,
// or a resonant denominator signals such a mismatch.
class ClassificationError : public Error {
public:
    explicit ClassificationError(const std::string& msg) : Error(msg) {}
};

} // namespace stablehit

#endif
