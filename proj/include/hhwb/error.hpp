#pragma once

#include <stdexcept>
#include <string>

namespace hhwb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix or chain space would exceed the configured entry cap.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// An algebraic invariant (associativity, unit law, module law, ...) fails.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class NotFiniteWithinCap : public Error {
 public:
  NotFiniteWithinCap(const std::string& what, std::size_t cap, std::string witness = {})
      : Error(what), cap_(cap), witness_(std::move(witness)) {}
  std::size_t cap() const { return cap_; }
  /// Label of an irreducible path reaching the cap, when known.
  const std::string& witness() const { return witness_; }

 private:
  std::size_t cap_;
  std::string witness_;
};

class InconclusiveConfluence : public Error {
 public:
  using Error::Error;
};

/// Malformed input document; `pointer` is a JSON pointer to the offending node.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : Error((pointer.empty() ? std::string("(root)") : pointer) + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// A mathematical identity that must hold was violated. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hhwb
