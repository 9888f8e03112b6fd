#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zklaims/bytes.hpp"
#include "zklaims/encoding.hpp"

namespace zklaims {

/// Hash bound by the circuit; the id is the on-disk u8.
enum class HashAlgorithm : std::uint8_t { sha256 = 1 };
enum class SignatureAlgorithm : std::uint8_t { ed25519 = 1 };

std::string_view to_string(HashAlgorithm h);
std::string_view to_string(SignatureAlgorithm s);
/// UnsupportedHash for unknown names or ids.
HashAlgorithm parse_hash_algorithm(std::string_view name);
HashAlgorithm hash_algorithm_from_id(std::uint8_t id);
SignatureAlgorithm parse_signature_algorithm(std::string_view name);

inline constexpr std::size_t kMaxPayloads = 64;
inline constexpr std::string_view kNonceLabel = "nonce";

/// Issuer-published shape of a credential: 5 labelled slots per payload,
/// the very last one being the issuer nonce.
struct CredentialSchema {
  std::string schema_id;
  std::string issuer_id;
  std::size_t payload_count = 1;
  std::vector<std::string> slot_labels;
  HashAlgorithm hash = HashAlgorithm::sha256;
  SignatureAlgorithm signature = SignatureAlgorithm::ed25519;

  std::size_t slot_count() const { return slot_labels.size(); }
  std::size_t nonce_slot() const { return slot_labels.size() - 1; }
  std::optional<std::size_t> slot_index(std::string_view label) const;

  /// ShapeError on label count, duplicate labels, missing trailing nonce or
  /// payload count outside [1, 64].
  void validate() const;

  /// Labels default to "slot<i>" where not given; "nonce" is appended.
  static CredentialSchema make(std::string schema_id, std::string issuer_id,
                               std::size_t payload_count, std::vector<std::string> labels);

  friend bool operator==(const CredentialSchema&, const CredentialSchema&) = default;
};

/// Holder-side credential C = (a, y, S).
struct Credential {
  std::string schema_id;
  std::string issuer_id;
  std::vector<encoding::AttributeValue> attributes;  // 5m values, last is the nonce
  std::vector<Digest> y;                             // one digest per payload
  Bytes signature;

  std::size_t payload_count() const { return y.size(); }
  encoding::PayloadPreimage payload(std::size_t j) const;

  friend bool operator==(const Credential&, const Credential&) = default;
};

// JSON file formats. Parsers throw MalformedInput.
std::string to_json(const CredentialSchema& schema);
CredentialSchema schema_from_json(std::string_view text);
std::string to_json(const Credential& credential);
Credential credential_from_json(std::string_view text);

}  // namespace zklaims
