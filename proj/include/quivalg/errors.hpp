#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quivalg {

/// Root of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad or inconsistent user input (documents, map files, expressions).
/// `line`/`column` are 1-based; 0 means "not known".
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateName : public InputError {
 public:
  using InputError::InputError;
};

class UnknownReference : public InputError {
 public:
  using InputError::InputError;
};

class InvalidRelation : public InputError {
 public:
  using InputError::InputError;
};

class InvalidField : public InputError {
 public:
  using InputError::InputError;
};

class CyclicQuiver : public InputError {
 public:
  /// `cycle` lists vertex names, closing with the starting vertex.
  explicit CyclicQuiver(std::vector<std::string> cycle);

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Shapes of vectors, matrices or subspaces do not agree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between scalars of different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CharTwoField : public PreconditionError {
 public:
  CharTwoField() : PreconditionError("Jordan-type identities require a field of characteristic != 2") {}
};

class NotIdempotent : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotASource : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class HasRelations : public PreconditionError {
 public:
  HasRelations() : PreconditionError("operation is defined only for relation-free path algebras") {}
};

class DisconnectedQuiver : public PreconditionError {
 public:
  DisconnectedQuiver() : PreconditionError("operation requires a connected quiver") {}
};

class NotLieDerivation : public PreconditionError {
 public:
  NotLieDerivation() : PreconditionError("map is not a Lie derivation") {}
};

/// A structural theorem failed on a concrete instance. Never expected;
/// raised as an alarm for implementation faults.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class NonUniqueDecomposition : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

class BlockLeak : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

}  // namespace quivalg
