#pragma once

#include <stdexcept>
#include <string>

namespace dfrob {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A polynomial or operator would need degrees beyond the declared cutoff.
class CutoffExceeded : public Error {
public:
    using Error::Error;
};

class InvalidDeltaOperator : public Error {
public:
    using Error::Error;
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Two series (or a series and a basic sequence) refer to different delta operators.
class BasisMismatch : public Error {
public:
    using Error::Error;
};

class Underdetermined : public Error {
public:
    using Error::Error;
};

class InvalidProblem : public Error {
public:
    using Error::Error;
};

class NoAdmissibleRoot : public Error {
public:
    using Error::Error;
};

/// The pure power-series ansatz fails; the solution needs a logarithmic term.
class LogarithmicCaseRequired : public Error {
public:
    using Error::Error;
};

/// A valid input whose solution lies outside what the library constructs.
class UnsupportedCase : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

}  // namespace dfrob
