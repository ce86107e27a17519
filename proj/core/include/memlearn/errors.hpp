#pragma once

#include <stdexcept>
#include <string>

namespace memlearn {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad family files, out-of-range indices, dimension mismatches.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The teacher contradicted itself, diverged from a script, or answered for a
// target that is not in the learned class.
class TeacherError : public Error {
 public:
  using Error::Error;
};

class TargetOutsideClass : public TeacherError {
 public:
  using TeacherError::TeacherError;
};

// A configured size cap (lattice nodes, enumeration edges, dimension) was hit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Session protocol misuse: submit without a pending query, answer after done.
class StateError : public Error {
 public:
  using Error::Error;
};

// An invariant that the algorithms guarantee did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace memlearn
