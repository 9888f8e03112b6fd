#pragma once

// The credential constraint system: for every payload, SHA-256 of its 256
// private bits equals the public digest; for every slot, the 50-bit value
// compared against the public reference gives an outcome selected by the
// public mask.

#include <memory>
#include <span>
#include <vector>

#include "zklaims/credential.hpp"
#include "zklaims/encoding.hpp"
#include "zklaims/r1cs.hpp"
#include "zklaims/statement.hpp"

namespace zklaims::circuit {

using algebra::Fr;

/// Variable indices of one slot's comparison outcome, and the constraints
/// [first_constraint, end_constraint) of its comparison gadget.
struct SlotWires {
  std::uint32_t ge = 0;
  std::uint32_t eq = 0;
  std::uint32_t gt = 0;
  std::size_t first_constraint = 0;
  std::size_t end_constraint = 0;
};

/// Fixed part of the descriptor file; enough to regenerate the system.
struct DescriptorHeader {
  static constexpr std::uint8_t kVersion = 1;

  HashAlgorithm hash = HashAlgorithm::sha256;
  std::size_t payload_count = 0;
  std::size_t constraint_count = 0;
  std::size_t num_variables = 0;
  std::size_t num_inputs = 0;
  Digest fingerprint{};

  /// "ZKCS" | version | hash_id | payload_count u16 | counts u32 | fingerprint
  Bytes serialize() const;
  /// MalformedInput / UnsupportedHash.
  static DescriptorHeader parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const DescriptorHeader&, const DescriptorHeader&) = default;
};

class ConstraintSystemDescriptor {
 public:
  std::size_t payload_count() const { return header_.payload_count; }
  HashAlgorithm hash() const { return header_.hash; }
  std::size_t total_slots() const { return encoding::kSlotsPerPayload * payload_count(); }
  std::size_t constraint_count() const { return header_.constraint_count; }
  std::size_t public_input_arity() const { return header_.num_inputs; }
  const Digest& fingerprint() const { return header_.fingerprint; }
  const DescriptorHeader& header() const { return header_; }

  const r1cs::ConstraintSystem& system() const { return *system_; }
  const std::vector<SlotWires>& slot_wires() const { return *wires_; }

  Bytes serialize() const { return header_.serialize(); }

 private:
  friend ConstraintSystemDescriptor build_constraint_system(std::size_t, HashAlgorithm);

  DescriptorHeader header_;
  std::shared_ptr<const r1cs::ConstraintSystem> system_;
  std::shared_ptr<const std::vector<SlotWires>> wires_;
};

/// RangeError unless payload_count is in [1, 64]. Results are cached per
/// (payload_count, hash), so repeated calls are cheap.
ConstraintSystemDescriptor build_constraint_system(std::size_t payload_count,
                                                   HashAlgorithm hash = HashAlgorithm::sha256);
/// Same as above, keyed by the raw id; UnsupportedHash for unknown ids.
ConstraintSystemDescriptor build_constraint_system(std::size_t payload_count, std::uint8_t hash_id);

/// Parses a descriptor file and regenerates the system it names;
/// KeyMismatch if the regenerated fingerprint differs.
ConstraintSystemDescriptor load_descriptor(std::span<const std::uint8_t> bytes);

/// Private part of the assignment: payload bits and every gadget wire.
struct WitnessAssignment {
  std::size_t payload_count = 0;
  std::size_t num_inputs = 0;
  std::vector<Fr> aux;

  /// Full z = [1, x, aux].
  std::vector<Fr> assignment(std::span<const Fr> x) const;
  /// Value of variable `index`, which must be auxiliary.
  const Fr& value(std::uint32_t index) const { return aux.at(index - 1 - num_inputs); }
};

/// Runs the circuit on the given preimages and public input without any
/// native checks; the result need not satisfy the system.
WitnessAssignment assign_witness(const ConstraintSystemDescriptor& descriptor,
                                 std::span<const encoding::PayloadPreimage> payloads,
                                 const encoding::PublicInput& x);

/// ShapeError if shapes disagree with the descriptor; UnsatisfiableStatement
/// (first false slot) if a clause does not hold for the credential.
WitnessAssignment synthesize_witness(const ConstraintSystemDescriptor& descriptor,
                                     const Credential& credential, const Statement& statement);

/// x for (credential, statement); ShapeError on mismatched slot counts.
encoding::PublicInput public_input_for(const Credential& credential, const Statement& statement);

}  // namespace zklaims::circuit
