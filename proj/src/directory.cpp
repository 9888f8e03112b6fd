#include "zklaims/directory.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstdlib>

namespace zklaims::directory {

namespace {
constexpr std::string_view kMagic = "ZKNR";
constexpr std::uint8_t kVersion = 1;
}  // namespace

std::string_view to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::descriptor: return "descriptor";
    case RecordKind::vk: return "vk";
    case RecordKind::context: return "context";
    case RecordKind::schema: return "schema";
    case RecordKind::pk: return "pk";
  }
  return "unknown";
}

RecordKind parse_record_kind(std::string_view name) {
  for (auto k : {RecordKind::descriptor, RecordKind::vk, RecordKind::context, RecordKind::schema,
                 RecordKind::pk}) {
    if (to_string(k) == name) return k;
  }
  throw MalformedInput("unknown record kind '" + std::string(name) + "'");
}

void validate_label(std::string_view label) {
  const bool charset_ok = std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '.' || c == '_' || c == '-';
  });
  if (label.empty() || label.size() > 255 || !charset_ok || label == "." || label == "..") {
    throw MalformedInput("invalid record label '" + std::string(label) + "'");
  }
}

void validate_namespace_id(std::string_view namespace_id) {
  const bool hex = std::all_of(namespace_id.begin(), namespace_id.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
  });
  if (namespace_id.size() != 64 || !hex) {
    throw MalformedInput("namespace id must be 64 lowercase hex digits");
  }
}

Bytes record_message(std::string_view label, RecordKind kind, std::span<const std::uint8_t> blob) {
  ByteWriter w;
  w.text(kRecordDomain);
  w.u16(static_cast<std::uint16_t>(label.size()));
  w.text(label);
  w.u8(static_cast<std::uint8_t>(kind));
  w.u32(static_cast<std::uint32_t>(blob.size()));
  w.bytes(blob);
  return w.take();
}

bool NamespaceRecord::signature_valid() const {
  ensure_sodium();
  const auto message = record_message(label, kind, blob);
  return crypto_sign_verify_detached(signature.data(), message.data(), message.size(),
                                     owner.data()) == 0;
}

Bytes NamespaceRecord::serialize() const {
  ByteWriter w;
  w.text(kMagic);
  w.u8(kVersion);
  w.u8(static_cast<std::uint8_t>(kind));
  w.u16(static_cast<std::uint16_t>(label.size()));
  w.text(label);
  w.u32(static_cast<std::uint32_t>(blob.size()));
  w.bytes(blob);
  w.bytes(signature);
  w.bytes(owner);
  return w.take();
}

NamespaceRecord NamespaceRecord::parse(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  if (in.text(kMagic.size()) != kMagic) throw MalformedInput("not a namespace record");
  if (const auto v = in.u8(); v != kVersion) {
    throw MalformedInput("unsupported record version " + std::to_string(v));
  }
  NamespaceRecord r;
  const auto kind = in.u8();
  if (kind < 1 || kind > static_cast<std::uint8_t>(RecordKind::pk)) {
    throw MalformedInput("unknown record kind " + std::to_string(kind));
  }
  r.kind = static_cast<RecordKind>(kind);
  r.label = in.text(in.u16());
  validate_label(r.label);
  const auto blob = in.bytes(in.u32());
  r.blob.assign(blob.begin(), blob.end());
  const auto sig = in.fixed<issuer::kSignatureSize>();
  std::copy(sig.begin(), sig.end(), r.signature.begin());
  const auto owner = in.fixed<issuer::kPublicKeySize>();
  std::copy(owner.begin(), owner.end(), r.owner.begin());
  in.expect_end();
  return r;
}

Store Store::open(const std::optional<std::filesystem::path>& fallback) {
  if (const char* env = std::getenv(std::string(kStoreEnvVar).c_str()); env != nullptr && *env != '\0') {
    return Store(env);
  }
  if (!fallback) throw MalformedInput("no store given (use --store or $ZKLAIMS_STORE)");
  return Store(*fallback);
}

std::filesystem::path Store::record_path(std::string_view namespace_id, std::string_view label) const {
  validate_namespace_id(namespace_id);
  validate_label(label);
  return root_ / std::string(namespace_id) / std::string(label);
}

NamespaceRecord Store::publish(const issuer::IssuerKeypair& owner, std::string_view label,
                               RecordKind kind, std::span<const std::uint8_t> blob) const {
  validate_label(label);
  if (blob.empty()) throw MalformedInput("cannot publish an empty blob");
  if (blob.size() > kMaxBlobSize) {
    throw OversizeBlob(std::string(to_string(kind)) + " blob of " + std::to_string(blob.size()) +
                       " bytes exceeds the 1 MiB record limit; proving keys travel out of band");
  }
  NamespaceRecord r;
  r.label = std::string(label);
  r.kind = kind;
  r.blob.assign(blob.begin(), blob.end());
  r.signature = owner.sign(record_message(r.label, kind, r.blob));
  r.owner = owner.public_key();

  const auto path = record_path(r.namespace_id(), label);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  write_file_atomic(path, r.serialize());
  return r;
}

NamespaceRecord Store::resolve(std::string_view namespace_id, std::string_view label) const {
  const auto path = record_path(namespace_id, label);
  if (!std::filesystem::is_regular_file(path)) {
    throw NotFound("no record '" + std::string(label) + "' in namespace " + std::string(namespace_id));
  }
  NamespaceRecord r;
  try {
    r = NamespaceRecord::parse(read_file(path));
  } catch (const MalformedInput& e) {
    throw InvalidRecordSignature("record " + path.string() + " does not decode: " + e.what());
  }
  if (r.namespace_id() != namespace_id || r.label != label) {
    throw InvalidRecordSignature("record " + path.string() + " belongs to another namespace or label");
  }
  if (!r.signature_valid()) {
    throw InvalidRecordSignature("record " + path.string() + " fails its owner signature check");
  }
  return r;
}

}  // namespace zklaims::directory
