#pragma once

// Groth16 over BN254: setup, prove and verify for the credential
// constraint system, plus the key and proof encodings.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "zklaims/algebra/curve.hpp"
#include "zklaims/circuit.hpp"
#include "zklaims/encoding.hpp"
#include "zklaims/random.hpp"

namespace zklaims::snark {

using algebra::G1Affine;
using algebra::G2Affine;

using Seed = std::array<std::uint8_t, 32>;

/// Common key header: magic | version | hash_id | payload_count u16 | flags |
/// descriptor fingerprint.
struct KeyHeader {
  static constexpr std::uint8_t kVersion = 1;
  static constexpr std::uint8_t kSeededFlag = 0x01;

  HashAlgorithm hash = HashAlgorithm::sha256;
  std::size_t payload_count = 0;
  /// Keys from a seeded setup are reproducible by anyone who knows the
  /// seed and must never be used outside tests.
  bool seeded = false;
  Digest fingerprint{};

  friend bool operator==(const KeyHeader&, const KeyHeader&) = default;
};

struct ProvingKey {
  KeyHeader header;
  G1Affine alpha_g1, beta_g1, delta_g1;
  G2Affine beta_g2, delta_g2;
  std::vector<G1Affine> a_query;     // A_j(tau), every variable
  std::vector<G1Affine> b_g1_query;  // B_j(tau), every variable
  std::vector<G2Affine> b_g2_query;
  std::vector<G1Affine> h_query;     // tau^i Z(tau) / delta
  std::vector<G1Affine> l_query;     // (beta A_j + alpha B_j + C_j) / delta, private j

  std::size_t public_input_arity() const { return a_query.size() - 1 - l_query.size(); }

  /// "ZKPK" header, then every query in uncompressed form.
  Bytes serialize() const;
  /// MalformedInput for anything that does not decode to curve points.
  static ProvingKey parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const ProvingKey&, const ProvingKey&) = default;
};

struct VerificationKey {
  KeyHeader header;
  G1Affine alpha_g1;
  G2Affine beta_g2, gamma_g2, delta_g2;
  std::vector<G1Affine> ic;  // (beta A_j + alpha B_j + C_j) / gamma, constant and inputs

  std::size_t public_input_arity() const { return ic.size() - 1; }

  /// "ZKVK" header, then compressed points.
  Bytes serialize() const;
  /// MalformedInput, including G2 points outside the prime-order subgroup.
  static VerificationKey parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const VerificationKey&, const VerificationKey&) = default;
};

struct Proof {
  static constexpr std::size_t kSize = 128;

  G1Affine a;
  G2Affine b;
  G1Affine c;

  /// A | B | C compressed; always kSize bytes.
  std::array<std::uint8_t, kSize> serialize() const;
  /// MalformedInput on wrong length or invalid points.
  static Proof parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const Proof&, const Proof&) = default;
};

struct KeyPair {
  ProvingKey pk;
  VerificationKey vk;
};

/// Without a seed the toxic waste comes from the system CSPRNG and is
/// discarded on return.
KeyPair setup(const circuit::ConstraintSystemDescriptor& descriptor,
              const std::optional<Seed>& seed = std::nullopt);

/// KeyMismatch if the key, witness and x disagree on shape or circuit;
/// UnsatisfiedConstraints if the witness does not satisfy the system under x.
Proof prove(const ProvingKey& pk, const circuit::WitnessAssignment& witness,
            const encoding::PublicInput& x, RandomSource& rng);
Proof prove(const ProvingKey& pk, const circuit::WitnessAssignment& witness,
            const encoding::PublicInput& x);

/// ShapeError if x does not have the key's arity.
bool verify(const VerificationKey& vk, const Proof& proof, const encoding::PublicInput& x);

}  // namespace zklaims::snark
