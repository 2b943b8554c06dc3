#pragma once

#include <stdexcept>
#include <string>

namespace innc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid user input (schema violations, bad flags, bad
/// quasi-arrays). The CLI maps these to exit code 1.
class InputError : public Error {
  public:
    using Error::Error;
};

/// Input document does not match the schema. `path` names the offending
/// location, e.g. `exceptional[0].c`.
class SchemaError : public InputError {
  public:
    SchemaError(std::string path, const std::string &what)
        : InputError(path + ": " + what), path_(std::move(path)) {}
    const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

/// Vectors or forms of incompatible ambient dimension.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A precondition on mathematical data failed (point outside a system,
/// inconsistent equations, codimension too high, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Two independent computations disagree. The CLI maps these to exit code 2.
class InconsistencyError : public Error {
  public:
    using Error::Error;
};

} // namespace innc
