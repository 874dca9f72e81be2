#pragma once

#include <stdexcept>
#include <string>

namespace wellpath {

// Error taxonomy shared by the library and the CLI exit-code mapping.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument values (out-of-range s, non-positive lengths, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Root bracketing / iteration-limit failures and non-finite evaluations.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

// A requested well design cannot be realized (e.g. KOP above surface).
class InfeasibleDesignError : public Error {
public:
    explicit InfeasibleDesignError(const std::string& msg) : Error(msg) {}
};

// Config file parse/validation failures.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// File emission failures.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace wellpath
