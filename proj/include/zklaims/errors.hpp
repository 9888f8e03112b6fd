#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zklaims {

enum class ErrorCode {
  range,
  parse,
  shape,
  unsupported_hash,
  unsatisfiable_statement,
  unsatisfied_constraints,
  key_mismatch,
  backend,
  missing_attribute,
  unknown_slot,
  duplicate_clause,
  nonce_predicate_forbidden,
  malformed,
  oversize_blob,
  not_found,
  invalid_record_signature,
  io,
};

const char* to_string(ErrorCode code);

/// Base of every error raised by this library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& m) : Error(ErrorCode::range, m) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& m) : Error(ErrorCode::parse, m) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& m) : Error(ErrorCode::shape, m) {}
};

class UnsupportedHash : public Error {
 public:
  explicit UnsupportedHash(const std::string& m) : Error(ErrorCode::unsupported_hash, m) {}
};

/// A statement clause is false for the credential's attribute values.
class UnsatisfiableStatement : public Error {
 public:
  explicit UnsatisfiableStatement(std::size_t slot)
      : Error(ErrorCode::unsatisfiable_statement,
              "statement is false for attribute slot " + std::to_string(slot)),
        slot_(slot) {}

  std::size_t slot() const { return slot_; }

 private:
  std::size_t slot_;
};

class UnsatisfiedConstraints : public Error {
 public:
  explicit UnsatisfiedConstraints(std::size_t index)
      : Error(ErrorCode::unsatisfied_constraints,
              "witness does not satisfy constraint " + std::to_string(index)),
        index_(index) {}

  std::size_t constraint_index() const { return index_; }

 private:
  std::size_t index_;
};

class KeyMismatch : public Error {
 public:
  explicit KeyMismatch(const std::string& m) : Error(ErrorCode::key_mismatch, m) {}
};

class BackendError : public Error {
 public:
  explicit BackendError(const std::string& m) : Error(ErrorCode::backend, m) {}
};

class MissingAttribute : public Error {
 public:
  explicit MissingAttribute(const std::string& label)
      : Error(ErrorCode::missing_attribute, "missing attribute '" + label + "'") {}
};

class UnknownSlot : public Error {
 public:
  explicit UnknownSlot(const std::string& slot)
      : Error(ErrorCode::unknown_slot, "unknown slot '" + slot + "'") {}
};

class DuplicateClause : public Error {
 public:
  explicit DuplicateClause(std::size_t slot)
      : Error(ErrorCode::duplicate_clause, "more than one clause for slot " + std::to_string(slot)) {}
};

class NoncePredicateForbidden : public Error {
 public:
  NoncePredicateForbidden()
      : Error(ErrorCode::nonce_predicate_forbidden, "the nonce slot cannot carry a predicate") {}
};

/// Bytes or documents that do not decode.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& m) : Error(ErrorCode::malformed, m) {}
};

class OversizeBlob : public Error {
 public:
  explicit OversizeBlob(const std::string& m) : Error(ErrorCode::oversize_blob, m) {}
};

class NotFound : public Error {
 public:
  explicit NotFound(const std::string& m) : Error(ErrorCode::not_found, m) {}
};

class InvalidRecordSignature : public Error {
 public:
  explicit InvalidRecordSignature(const std::string& m)
      : Error(ErrorCode::invalid_record_signature, m) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& m) : Error(ErrorCode::io, m) {}
};

}  // namespace zklaims
