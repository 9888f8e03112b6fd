#include "zklaims/credential.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "json_util.hpp"

namespace zklaims {

using detail::expect_keys;
using detail::guarded;
using detail::ordered_json;
using detail::parse_decimal;
using detail::parse_digest;
using detail::parse_json;

std::string_view to_string(HashAlgorithm h) {
  switch (h) {
    case HashAlgorithm::sha256: return "sha256";
  }
  return "unknown";
}

std::string_view to_string(SignatureAlgorithm s) {
  switch (s) {
    case SignatureAlgorithm::ed25519: return "ed25519";
  }
  return "unknown";
}

HashAlgorithm parse_hash_algorithm(std::string_view name) {
  if (name == "sha256") return HashAlgorithm::sha256;
  throw UnsupportedHash("unsupported hash '" + std::string(name) + "'");
}

HashAlgorithm hash_algorithm_from_id(std::uint8_t id) {
  if (id == static_cast<std::uint8_t>(HashAlgorithm::sha256)) return HashAlgorithm::sha256;
  throw UnsupportedHash("unsupported hash id " + std::to_string(id));
}

SignatureAlgorithm parse_signature_algorithm(std::string_view name) {
  if (name == "ed25519") return SignatureAlgorithm::ed25519;
  throw MalformedInput("unsupported signature algorithm '" + std::string(name) + "'");
}

std::optional<std::size_t> CredentialSchema::slot_index(std::string_view label) const {
  const auto it = std::find(slot_labels.begin(), slot_labels.end(), label);
  if (it == slot_labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - slot_labels.begin());
}

namespace {

// "slot<digits>" names a position; such labels may only sit at that position.
std::optional<std::size_t> positional_label(std::string_view label) {
  if (label.size() <= 4 || label.substr(0, 4) != "slot") return std::nullopt;
  std::size_t v = 0;
  const auto digits = label.substr(4);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return v;
}

}  // namespace

void CredentialSchema::validate() const {
  if (payload_count < 1 || payload_count > kMaxPayloads) {
    throw ShapeError("payload count must be in [1, 64], got " + std::to_string(payload_count));
  }
  if (slot_labels.size() != encoding::kSlotsPerPayload * payload_count) {
    throw ShapeError("schema needs " + std::to_string(encoding::kSlotsPerPayload * payload_count) +
                     " slot labels, got " + std::to_string(slot_labels.size()));
  }
  if (slot_labels.back() != kNonceLabel) throw ShapeError("last slot label must be \"nonce\"");
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < slot_labels.size(); ++i) {
    const auto& label = slot_labels[i];
    if (label.empty()) throw ShapeError("empty slot label at position " + std::to_string(i));
    if (!seen.insert(label).second) throw ShapeError("duplicate slot label '" + label + "'");
    if (const auto pos = positional_label(label); pos && *pos != i) {
      throw ShapeError("label '" + label + "' names a different slot");
    }
  }
}

CredentialSchema CredentialSchema::make(std::string schema_id, std::string issuer_id,
                                        std::size_t payload_count,
                                        std::vector<std::string> labels) {
  CredentialSchema s;
  s.schema_id = std::move(schema_id);
  s.issuer_id = std::move(issuer_id);
  s.payload_count = payload_count;
  const std::size_t n = encoding::kSlotsPerPayload * payload_count;
  if (labels.size() >= n) throw ShapeError("at most " + std::to_string(n - 1) + " labels fit");
  for (std::size_t i = labels.size(); i + 1 < n; ++i) labels.push_back("slot" + std::to_string(i));
  labels.emplace_back(kNonceLabel);
  s.slot_labels = std::move(labels);
  s.validate();
  return s;
}

encoding::PayloadPreimage Credential::payload(std::size_t j) const {
  std::array<encoding::AttributeValue, encoding::kSlotsPerPayload> slots;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    slots[s] = attributes.at(encoding::kSlotsPerPayload * j + s);
  }
  return encoding::pack_payload(slots);
}

std::string to_json(const CredentialSchema& schema) {
  ordered_json j;
  j["schema_id"] = schema.schema_id;
  j["issuer_id"] = schema.issuer_id;
  j["payload_count"] = schema.payload_count;
  j["slot_labels"] = schema.slot_labels;
  j["hash_id"] = to_string(schema.hash);
  j["sig_id"] = to_string(schema.signature);
  return j.dump(2) + "\n";
}

CredentialSchema schema_from_json(std::string_view text) {
  const auto j = parse_json(text);
  return guarded("schema", [&] {
    expect_keys(j, {"schema_id", "issuer_id", "payload_count", "slot_labels", "hash_id", "sig_id"});
    CredentialSchema s;
    s.schema_id = j.at("schema_id").get<std::string>();
    s.issuer_id = j.at("issuer_id").get<std::string>();
    s.payload_count = j.at("payload_count").get<std::size_t>();
    s.slot_labels = j.at("slot_labels").get<std::vector<std::string>>();
    s.hash = parse_hash_algorithm(j.at("hash_id").get<std::string>());
    s.signature = parse_signature_algorithm(j.at("sig_id").get<std::string>());
    s.validate();
    return s;
  });
}

std::string to_json(const Credential& credential) {
  ordered_json j;
  j["schema_id"] = credential.schema_id;
  j["issuer_id"] = credential.issuer_id;
  auto& attrs = j["attributes"] = ordered_json::array();
  for (const auto& a : credential.attributes) attrs.push_back(std::to_string(a.value()));
  auto& y = j["y"] = ordered_json::array();
  for (const auto& d : credential.y) y.push_back(to_hex(d));
  j["S"] = to_base64(credential.signature);
  return j.dump(2) + "\n";
}

Credential credential_from_json(std::string_view text) {
  const auto j = parse_json(text);
  return guarded("credential", [&] {
    expect_keys(j, {"schema_id", "issuer_id", "attributes", "y", "S"});
    Credential c;
    c.schema_id = j.at("schema_id").get<std::string>();
    c.issuer_id = j.at("issuer_id").get<std::string>();
    for (const auto& a : j.at("attributes")) {
      c.attributes.emplace_back(parse_decimal(a.get<std::string>()));
    }
    for (const auto& d : j.at("y")) c.y.push_back(parse_digest(d.get<std::string>()));
    c.signature = from_base64(j.at("S").get<std::string>());
    if (c.y.empty() || c.attributes.size() != encoding::kSlotsPerPayload * c.y.size()) {
      throw MalformedInput("credential needs 5 attributes per digest");
    }
    return c;
  });
}

}  // namespace zklaims
