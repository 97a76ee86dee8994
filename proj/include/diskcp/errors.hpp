#pragma once

#include <stdexcept>
#include <string>

namespace diskcp {

/// Base class of every error raised by the library. `code()` is the stable
/// identifier used in the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Input outside the domain of an operation (|z| > 1, |z0| >= 1, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& m) : Error("DomainError", m) {}
};

class PoleError : public Error {
public:
    explicit PoleError(const std::string& m) : Error("PoleError", m) {}
};

/// A numerical self-check (residual, round trip) exceeded its tolerance.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& m) : Error("NumericalError", m) {}
};

/// Operation requires a different automorphism class.
class ClassError : public Error {
public:
    explicit ClassError(const std::string& m) : Error("ClassError", m) {}
};

/// Representation kind does not match the automorphism or the operation.
class KindMismatch : public Error {
public:
    explicit KindMismatch(const std::string& m) : Error("KindMismatch", m) {}
};

class RationalityRequired : public Error {
public:
    explicit RationalityRequired(const std::string& m) : Error("RationalityRequired", m) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

}  // namespace diskcp
