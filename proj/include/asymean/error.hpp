#pragma once

#include <stdexcept>
#include <string>

namespace asymean {

/// Base class for failures raised by the engines.  The CLI maps these to
/// exit code 1; malformed user input is reported through UsageError instead.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DivisionByZero : public Error
{
public:
    DivisionByZero() : Error("division_by_zero", "division by zero") {}
};

class ParameterError : public Error
{
public:
    explicit ParameterError(const std::string& message)
        : Error("parameter", message) {}
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace asymean
