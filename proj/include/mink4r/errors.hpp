#pragma once

#include <stdexcept>
#include <string>

namespace mink4r {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input lies outside the domain of a closed-form formula. Carries the
/// offending value (e.g. the arch argument of the transmission angle).
class DomainError : public Error {
public:
    DomainError(const std::string& what, double value)
        : Error(what), value_(value) {}

    double value() const noexcept { return value_; }

private:
    double value_;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Angle requested between vectors of different causal kind.
class MixedCausalType : public Error {
public:
    using Error::Error;
};

class NotFuturePointing : public Error {
public:
    using Error::Error;
};

/// Coupler direction AB is timelike or lightlike.
class TimelikeCoupler : public Error {
public:
    using Error::Error;
};

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

/// Coupler point whose leg to A or B is not spacelike.
class DegenerateLeg : public Error {
public:
    using Error::Error;
};

class UnclassifiedSignPattern : public Error {
public:
    using Error::Error;
};

}  // namespace mink4r
