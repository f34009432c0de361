#pragma once

#include <stdexcept>
#include <string>

namespace ybfk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Operands live over different Lie algebras or on different sides (g vs g*).
class ParentMismatch : public Error {
public:
  using Error::Error;
};

/// A bilinear form or restricted map that must be invertible is singular.
class Degenerate : public Error {
public:
  using Error::Error;
};

/// The r-matrix restricted to its carrier is singular.
class DegenerateOnCarrier : public Degenerate {
public:
  using Degenerate::Degenerate;
};

class NotProportional : public Error {
public:
  using Error::Error;
};

/// A group element is outside the subgroup an operation requires.
class MembershipError : public Error {
public:
  using Error::Error;
};

class NotInAlgebra : public Error {
public:
  using Error::Error;
};

class NotNilpotent : public Error {
public:
  using Error::Error;
};

class NotRealized : public Error {
public:
  using Error::Error;
};

class UndefinedClassifier : public Error {
public:
  using Error::Error;
};

class NonFinite : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace ybfk
