#pragma once

#include <string>
#include <vector>

#include "zklaims/encoding.hpp"

namespace zklaims {

struct Clause {
  encoding::PredicateMask mask;
  encoding::ReferenceValue reference;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// One normalized clause per attribute slot. "any" clauses always carry
/// reference 0 and the final (nonce) slot is always "any", so equal
/// statements have equal public inputs.
class Statement {
 public:
  /// All-"any" statement over `payload_count` payloads.
  static Statement trivial(std::size_t payload_count);
  /// ShapeError unless the size is a positive multiple of 5;
  /// NoncePredicateForbidden if the last clause is not "any".
  static Statement from_clauses(std::vector<Clause> clauses);

  std::size_t slot_count() const { return clauses_.size(); }
  std::size_t payload_count() const { return clauses_.size() / encoding::kSlotsPerPayload; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t slot) const { return clauses_.at(slot); }

  std::vector<encoding::PredicateMask> masks() const;
  std::vector<encoding::ReferenceValue> references() const;

  /// Canonical text form: one "slot<i> <op> <value>" line per non-"any" clause.
  std::string to_dsl() const;

  friend bool operator==(const Statement&, const Statement&) = default;

 private:
  std::vector<Clause> clauses_;
};

}  // namespace zklaims
