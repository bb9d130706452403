#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetlie {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// The transitive closure of the given relations is not antisymmetric.
class CycleError : public Error
{
public:
  using Error::Error;
};

class DisconnectedError : public Error
{
public:
  using Error::Error;
};

class InvalidParameter : public Error
{
public:
  using Error::Error;
};

class PreconditionError : public Error
{
public:
  using Error::Error;
};

class FieldMismatch : public Error
{
public:
  using Error::Error;
};

/// Operands belong to incidence algebras over different posets or fields.
class AlgebraMismatch : public Error
{
public:
  using Error::Error;
};

class DivisionByZero : public Error
{
public:
  using Error::Error;
};

/// sigma(x,y) sigma(y,z) != sigma(x,z) for some x <= y <= z, or sigma(x,x) != 1.
class CocycleError : public Error
{
public:
  using Error::Error;
};

class NotInvertible : public Error
{
public:
  using Error::Error;
};

/// An exhaustive enumeration was asked for a basis larger than the configured bound.
class BoundExceeded : public Error
{
public:
  BoundExceeded(std::size_t size, std::size_t bound);
  std::size_t size() const noexcept { return size_; }
  std::size_t bound() const noexcept { return bound_; }

private:
  std::size_t size_;
  std::size_t bound_;
};

class WellDefinednessError : public Error
{
public:
  using Error::Error;
};

class ExtractionError : public Error
{
public:
  using Error::Error;
};

class StructureMismatch : public Error
{
public:
  using Error::Error;
};

/// A set of bijections failed a group axiom. `first` and `second` index the
/// offending elements; for a missing inverse or identity `second == first`.
class NotClosed : public Error
{
public:
  NotClosed(const std::string& what, std::size_t first, std::size_t second);
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

private:
  std::size_t first_;
  std::size_t second_;
};

} // namespace posetlie
