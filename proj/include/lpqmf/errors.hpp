#pragma once

#include <stdexcept>
#include <string>

namespace lpqmf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input: bad parameters, violated design constraints, malformed documents.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a pole of a map or a transfer function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A filter fed to a constructor is not in the expected symmetry class.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// A transfer function has poles where the operation cannot tolerate them
/// (on the unit circle or on an evaluation grid point).
class RealizabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpqmf
