#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "zklaims/circuit.hpp"
#include "zklaims/credential.hpp"
#include "zklaims/random.hpp"
#include "zklaims/snark.hpp"

namespace zklaims::issuer {

inline constexpr std::size_t kPublicKeySize = 32;
inline constexpr std::size_t kSignatureSize = 64;
inline constexpr std::string_view kCredentialDomain = "ZKLAIMS-CRED-v1";

using PublicKey = std::array<std::uint8_t, kPublicKeySize>;
using Signature = std::array<std::uint8_t, kSignatureSize>;

/// Lowercase hex SHA-256 of an Ed25519 public key. Also serves as the
/// owner's namespace id in the directory.
std::string issuer_id_for(const PublicKey& public_key);

/// Ed25519 signing key. The secret never leaves this object except through
/// to_secret_json.
class IssuerKeypair {
 public:
  static IssuerKeypair generate();
  static IssuerKeypair from_seed(std::span<const std::uint8_t, 32> seed);

  const PublicKey& public_key() const { return public_key_; }
  const std::string& issuer_id() const { return issuer_id_; }
  Signature sign(std::span<const std::uint8_t> message) const;

  /// {"sig_id", "issuer_id", "public_key", "secret_key"}, keys in base64.
  std::string to_secret_json() const;
  /// {"sig_id", "issuer_id", "public_key"}.
  std::string to_public_json() const;
  /// MalformedInput, including an issuer_id or public key that does not
  /// match the secret.
  static IssuerKeypair from_secret_json(std::string_view text);

  friend bool operator==(const IssuerKeypair& a, const IssuerKeypair& b) {
    return a.seed_ == b.seed_;
  }

 private:
  std::array<std::uint8_t, 32> seed_{};
  std::array<std::uint8_t, 64> secret_{};
  PublicKey public_key_{};
  std::string issuer_id_;
};

/// Parses a public key file; the issuer_id field must match the key.
PublicKey public_key_from_json(std::string_view text);
std::string public_key_to_json(const PublicKey& public_key);

/// Domain tag, then issuer_id, schema_id (each with a u16 length prefix),
/// the u16 digest count and the digests.
Bytes credential_message(std::string_view schema_id, std::string_view issuer_id,
                         std::span<const Digest> y);

/// ShapeError for an empty y.
Signature sign_credential(const IssuerKeypair& key, std::string_view schema_id,
                          std::string_view issuer_id, std::span<const Digest> y);
/// MalformedInput unless the signature is exactly 64 bytes.
bool verify_credential_signature(const PublicKey& public_key, std::string_view schema_id,
                                 std::string_view issuer_id, std::span<const Digest> y,
                                 std::span<const std::uint8_t> signature);
bool verify_credential_signature(const PublicKey& public_key, const Credential& credential);

/// Fills the schema's slots from `values` (every label but "nonce"), draws
/// a 50-bit nonce, hashes each payload and signs. MissingAttribute,
/// UnknownSlot for labels outside the schema, KeyMismatch when the schema
/// names a different issuer.
Credential issue_credential(const IssuerKeypair& key, const CredentialSchema& schema,
                            const std::map<std::string, encoding::AttributeValue>& values,
                            RandomSource& rng);
Credential issue_credential(const IssuerKeypair& key, const CredentialSchema& schema,
                            const std::map<std::string, encoding::AttributeValue>& values);
/// Raw integers; RangeError for values of 2^50 or more.
Credential issue_credential(const IssuerKeypair& key, const CredentialSchema& schema,
                            const std::map<std::string, std::uint64_t>& values, RandomSource& rng);

struct IssuerArtifacts {
  circuit::ConstraintSystemDescriptor descriptor;
  snark::ProvingKey pk;
  snark::VerificationKey vk;
};

IssuerArtifacts bootstrap_issuer(const CredentialSchema& schema,
                                 const std::optional<snark::Seed>& seed = std::nullopt);

}  // namespace zklaims::issuer
