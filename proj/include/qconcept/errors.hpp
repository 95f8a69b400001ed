#pragma once

#include <stdexcept>
#include <string>

namespace qconcept {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A scalar argument lies outside its domain (non-positive width, negative time, ...).
class InvalidParameter : public Error {
public:
  using Error::Error;
};

/// Structured input that violates a precondition (unsorted abscissae, too few states).
class InvalidInput : public Error {
public:
  using Error::Error;
};

class QuadratureFailure : public Error {
public:
  using Error::Error;
};

/// The requested normalized combination has (numerically) zero norm.
class DegenerateCombination : public Error {
public:
  using Error::Error;
};

class NotNormalized : public Error {
public:
  using Error::Error;
};

/// A membership degree outside [0, 1].
class InvalidMembership : public Error {
public:
  using Error::Error;
};

class DegenerateMembership : public Error {
public:
  using Error::Error;
};

class GridMismatch : public Error {
public:
  using Error::Error;
};

} // namespace qconcept
