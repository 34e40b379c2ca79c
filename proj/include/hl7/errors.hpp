#pragma once

#include <stdexcept>
#include <string>

namespace hl7 {

// Base class for all domain errors raised by this library. CLI maps these
// to exit code 1; anything else is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownNullFlavor : public ParseError {
public:
    using ParseError::ParseError;
};

class FlavorNotAllowed : public Error {
public:
    using Error::Error;
};

// UCUM unit errors.
class UnitError : public Error {
public:
    using Error::Error;
};

class UnknownAtom : public UnitError {
public:
    using UnitError::UnitError;
};

class UnknownPrefix : public UnitError {
public:
    using UnitError::UnitError;
};

class UnitSyntaxError : public UnitError {
public:
    using UnitError::UnitError;
};

// Annotations and non-ratio units (Cel, arbitrary units) fall outside the
// factor-times-dimension model and are rejected up front.
class UnsupportedUnit : public UnitError {
public:
    using UnitError::UnitError;
};

class RegistryError : public Error {
public:
    using Error::Error;
};

class CycleError : public RegistryError {
public:
    using RegistryError::RegistryError;
};

class FormatError : public RegistryError {
public:
    using RegistryError::RegistryError;
};

class DanglingReference : public RegistryError {
public:
    using RegistryError::RegistryError;
};

class DivideByZero : public Error {
public:
    using Error::Error;
};

class NotComparable : public Error {
public:
    using Error::Error;
};

class NullOperand : public Error {
public:
    using Error::Error;
};

class InvalidDate : public ParseError {
public:
    using ParseError::ParseError;
};

class BoundsReversed : public ParseError {
public:
    using ParseError::ParseError;
};

class CastError : public Error {
public:
    using Error::Error;
};

class InvalidCode : public Error {
public:
    using Error::Error;
};

class UnknownDomain : public Error {
public:
    using Error::Error;
};

class UnknownCode : public Error {
public:
    using Error::Error;
};

class UnknownCodeSystem : public Error {
public:
    using Error::Error;
};

class DifferentCodeSystem : public Error {
public:
    using Error::Error;
};

class InvalidRoot : public ParseError {
public:
    using ParseError::ParseError;
};

class NullNotAllowed : public Error {
public:
    using Error::Error;
};

// Raised when a canonical magnitude cannot be held in the packed
// mantissa-and-exponent encoding (non-decimal denominator or > 63 bits).
class EncodeRangeError : public Error {
public:
    using Error::Error;
};

} // namespace hl7
