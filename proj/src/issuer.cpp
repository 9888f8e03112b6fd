#include "zklaims/issuer.hpp"

#include <sodium.h>

#include <algorithm>

#include "json_util.hpp"

namespace zklaims::issuer {

using detail::expect_keys;
using detail::guarded;
using detail::ordered_json;

std::string issuer_id_for(const PublicKey& public_key) { return to_hex(sha256(public_key)); }

IssuerKeypair IssuerKeypair::generate() {
  ensure_sodium();
  std::array<std::uint8_t, 32> seed{};
  randombytes_buf(seed.data(), seed.size());
  auto key = from_seed(seed);
  sodium_memzero(seed.data(), seed.size());
  return key;
}

IssuerKeypair IssuerKeypair::from_seed(std::span<const std::uint8_t, 32> seed) {
  ensure_sodium();
  IssuerKeypair key;
  std::copy(seed.begin(), seed.end(), key.seed_.begin());
  crypto_sign_seed_keypair(key.public_key_.data(), key.secret_.data(), key.seed_.data());
  key.issuer_id_ = issuer_id_for(key.public_key_);
  return key;
}

Signature IssuerKeypair::sign(std::span<const std::uint8_t> message) const {
  Signature sig{};
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), secret_.data());
  return sig;
}

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> decode_fixed(const ordered_json& j, std::string_view field) {
  const auto bytes = from_base64(j.at(std::string(field)).get<std::string>());
  if (bytes.size() != N) {
    throw MalformedInput(std::string(field) + " must be " + std::to_string(N) + " bytes");
  }
  std::array<std::uint8_t, N> out{};
  std::copy(bytes.begin(), bytes.end(), out.begin());
  return out;
}

ordered_json public_fields(const PublicKey& pk) {
  ordered_json j;
  j["sig_id"] = to_string(SignatureAlgorithm::ed25519);
  j["issuer_id"] = issuer_id_for(pk);
  j["public_key"] = to_base64(pk);
  return j;
}

}  // namespace

std::string IssuerKeypair::to_secret_json() const {
  auto j = public_fields(public_key_);
  j["secret_key"] = to_base64(seed_);
  return j.dump(2) + "\n";
}

std::string IssuerKeypair::to_public_json() const { return public_key_to_json(public_key_); }

IssuerKeypair IssuerKeypair::from_secret_json(std::string_view text) {
  const auto j = detail::parse_json(text);
  return guarded("secret key file", [&] {
    expect_keys(j, {"sig_id", "issuer_id", "public_key", "secret_key"});
    parse_signature_algorithm(j.at("sig_id").get<std::string>());
    const auto seed = decode_fixed<32>(j, "secret_key");
    auto key = from_seed(seed);
    if (decode_fixed<kPublicKeySize>(j, "public_key") != key.public_key() ||
        j.at("issuer_id").get<std::string>() != key.issuer_id()) {
      throw MalformedInput("secret key file: public key does not match the secret");
    }
    return key;
  });
}

std::string public_key_to_json(const PublicKey& public_key) {
  return public_fields(public_key).dump(2) + "\n";
}

PublicKey public_key_from_json(std::string_view text) {
  const auto j = detail::parse_json(text);
  return guarded("public key file", [&] {
    expect_keys(j, {"sig_id", "issuer_id", "public_key"});
    parse_signature_algorithm(j.at("sig_id").get<std::string>());
    const auto pk = decode_fixed<kPublicKeySize>(j, "public_key");
    if (j.at("issuer_id").get<std::string>() != issuer_id_for(pk)) {
      throw MalformedInput("public key file: issuer_id does not match the key");
    }
    return pk;
  });
}

Bytes credential_message(std::string_view schema_id, std::string_view issuer_id,
                         std::span<const Digest> y) {
  if (issuer_id.size() > 0xffff || schema_id.size() > 0xffff || y.size() > 0xffff) {
    throw ShapeError("credential fields too long to sign");
  }
  ByteWriter w;
  w.text(kCredentialDomain);
  w.u16(static_cast<std::uint16_t>(issuer_id.size()));
  w.text(issuer_id);
  w.u16(static_cast<std::uint16_t>(schema_id.size()));
  w.text(schema_id);
  w.u16(static_cast<std::uint16_t>(y.size()));
  for (const auto& d : y) w.bytes(d);
  return w.take();
}

Signature sign_credential(const IssuerKeypair& key, std::string_view schema_id,
                          std::string_view issuer_id, std::span<const Digest> y) {
  if (y.empty()) throw ShapeError("cannot sign an empty digest vector");
  return key.sign(credential_message(schema_id, issuer_id, y));
}

bool verify_credential_signature(const PublicKey& public_key, std::string_view schema_id,
                                 std::string_view issuer_id, std::span<const Digest> y,
                                 std::span<const std::uint8_t> signature) {
  if (signature.size() != kSignatureSize) {
    throw MalformedInput("signature must be " + std::to_string(kSignatureSize) + " bytes, got " +
                         std::to_string(signature.size()));
  }
  ensure_sodium();
  const auto message = credential_message(schema_id, issuer_id, y);
  return crypto_sign_verify_detached(signature.data(), message.data(), message.size(),
                                     public_key.data()) == 0;
}

bool verify_credential_signature(const PublicKey& public_key, const Credential& credential) {
  return verify_credential_signature(public_key, credential.schema_id, credential.issuer_id,
                                     credential.y, credential.signature);
}

Credential issue_credential(const IssuerKeypair& key, const CredentialSchema& schema,
                            const std::map<std::string, encoding::AttributeValue>& values,
                            RandomSource& rng) {
  schema.validate();
  if (schema.issuer_id != key.issuer_id()) {
    throw KeyMismatch("schema belongs to issuer " + schema.issuer_id + ", key is " +
                      key.issuer_id());
  }
  for (const auto& [label, value] : values) {
    const auto slot = schema.slot_index(label);
    if (!slot || *slot == schema.nonce_slot()) throw UnknownSlot(label);
  }

  Credential c;
  c.schema_id = schema.schema_id;
  c.issuer_id = schema.issuer_id;
  c.attributes.resize(schema.slot_count());
  for (std::size_t i = 0; i < schema.nonce_slot(); ++i) {
    const auto it = values.find(schema.slot_labels[i]);
    if (it == values.end()) throw MissingAttribute(schema.slot_labels[i]);
    c.attributes[i] = it->second;
  }
  c.attributes.back() = encoding::AttributeValue(rng.next_u64() & (encoding::kValueLimit - 1));

  for (std::size_t j = 0; j < schema.payload_count; ++j) {
    c.y.push_back(encoding::hash_payload(c.payload(j)));
  }
  const auto sig = sign_credential(key, c.schema_id, c.issuer_id, c.y);
  c.signature.assign(sig.begin(), sig.end());
  return c;
}

Credential issue_credential(const IssuerKeypair& key, const CredentialSchema& schema,
                            const std::map<std::string, encoding::AttributeValue>& values) {
  SystemRandom rng;
  return issue_credential(key, schema, values, rng);
}

Credential issue_credential(const IssuerKeypair& key, const CredentialSchema& schema,
                            const std::map<std::string, std::uint64_t>& values, RandomSource& rng) {
  std::map<std::string, encoding::AttributeValue> checked;
  for (const auto& [label, v] : values) {
    try {
      checked.emplace(label, encoding::AttributeValue(v));
    } catch (const RangeError& e) {
      throw RangeError("attribute '" + label + "': " + e.what());
    }
  }
  return issue_credential(key, schema, checked, rng);
}

IssuerArtifacts bootstrap_issuer(const CredentialSchema& schema,
                                 const std::optional<snark::Seed>& seed) {
  schema.validate();
  auto descriptor = circuit::build_constraint_system(schema.payload_count, schema.hash);
  auto keys = snark::setup(descriptor, seed);
  return {std::move(descriptor), std::move(keys.pk), std::move(keys.vk)};
}

}  // namespace zklaims::issuer
