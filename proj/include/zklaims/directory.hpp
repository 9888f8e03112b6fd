#pragma once

// Local stand-in for a name system: signed records under
// <store>/<namespace_id>/<label>, one file each.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "zklaims/bytes.hpp"
#include "zklaims/issuer.hpp"

namespace zklaims::directory {

enum class RecordKind : std::uint8_t { descriptor = 1, vk = 2, context = 3, schema = 4, pk = 5 };

std::string_view to_string(RecordKind kind);
/// MalformedInput for unknown names.
RecordKind parse_record_kind(std::string_view name);

inline constexpr std::size_t kMaxBlobSize = std::size_t{1} << 20;
inline constexpr std::string_view kRecordDomain = "ZKLAIMS-NR-v1";
inline constexpr std::string_view kStoreEnvVar = "ZKLAIMS_STORE";

/// MalformedInput unless 1..255 characters from [A-Za-z0-9._-] and not "." or "..".
void validate_label(std::string_view label);
/// MalformedInput unless 64 lowercase hex digits.
void validate_namespace_id(std::string_view namespace_id);

/// Bytes covered by the owner signature: domain tag, u16 label length,
/// label, kind, u32 blob length, blob.
Bytes record_message(std::string_view label, RecordKind kind, std::span<const std::uint8_t> blob);

struct NamespaceRecord {
  std::string label;
  RecordKind kind = RecordKind::descriptor;
  Bytes blob;
  issuer::Signature signature{};
  issuer::PublicKey owner{};

  /// Digest of the owner key; the directory the record lives in.
  std::string namespace_id() const { return issuer::issuer_id_for(owner); }
  bool signature_valid() const;

  /// "ZKNR" | version | kind | u16 label length | label | u32 blob length |
  /// blob | signature | owner public key.
  Bytes serialize() const;
  /// MalformedInput; does not check the signature.
  static NamespaceRecord parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const NamespaceRecord&, const NamespaceRecord&) = default;
};

class Store {
 public:
  explicit Store(std::filesystem::path root) : root_(std::move(root)) {}

  /// $ZKLAIMS_STORE if set, else `fallback`; MalformedInput if neither.
  static Store open(const std::optional<std::filesystem::path>& fallback);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path record_path(std::string_view namespace_id, std::string_view label) const;

  /// Signs and writes atomically, replacing any record with the same label.
  /// MalformedInput for an empty blob or bad label; OversizeBlob above 1 MiB.
  NamespaceRecord publish(const issuer::IssuerKeypair& owner, std::string_view label,
                          RecordKind kind, std::span<const std::uint8_t> blob) const;

  /// NotFound if absent; InvalidRecordSignature if the stored bytes do not
  /// decode, are not signed by the namespace owner, or name another label.
  NamespaceRecord resolve(std::string_view namespace_id, std::string_view label) const;

 private:
  std::filesystem::path root_;
};

}  // namespace zklaims::directory
