#pragma once

#include <stdexcept>
#include <string>

namespace frameseq {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad parameters, unsorted pieces, schema problems.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The inputs are well-formed but the operation does not apply to them
// (e.g. a hypothesis of the test is not met). The message names the
// failed hypothesis.
class Refusal : public Error {
public:
    using Error::Error;
};

// Numerical integration did not reach the requested tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    double achieved_error() const noexcept { return achieved_; }

private:
    double achieved_;
};

// Two independent computational routes disagreed beyond tolerance.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace frameseq
