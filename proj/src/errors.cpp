#include "zklaims/errors.hpp"

namespace zklaims {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::range: return "RangeError";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::shape: return "ShapeError";
    case ErrorCode::unsupported_hash: return "UnsupportedHash";
    case ErrorCode::unsatisfiable_statement: return "UnsatisfiableStatement";
    case ErrorCode::unsatisfied_constraints: return "UnsatisfiedConstraints";
    case ErrorCode::key_mismatch: return "KeyMismatch";
    case ErrorCode::backend: return "BackendError";
    case ErrorCode::missing_attribute: return "MissingAttribute";
    case ErrorCode::unknown_slot: return "UnknownSlot";
    case ErrorCode::duplicate_clause: return "DuplicateClause";
    case ErrorCode::nonce_predicate_forbidden: return "NoncePredicateForbidden";
    case ErrorCode::malformed: return "MalformedInput";
    case ErrorCode::oversize_blob: return "OversizeBlob";
    case ErrorCode::not_found: return "NotFound";
    case ErrorCode::invalid_record_signature: return "InvalidRecordSignature";
    case ErrorCode::io: return "IoError";
  }
  return "Error";
}

}  // namespace zklaims
