#include "zklaims/encoding.hpp"

#include <algorithm>

namespace zklaims::encoding {

using algebra::Fr;

PayloadPreimage pack_payload(const std::array<AttributeValue, kSlotsPerPayload>& slots) {
  PayloadPreimage out;
  out.slots = slots;
  for (std::size_t s = 0; s < kSlotsPerPayload; ++s) {
    const std::uint64_t v = slots[s].value();
    for (std::size_t k = 0; k < kAttributeBits; ++k) {
      if (((v >> (kAttributeBits - 1 - k)) & 1U) == 0) continue;
      const std::size_t pos = s * kAttributeBits + k;
      out.packed[pos / 8] |= static_cast<std::uint8_t>(0x80U >> (pos % 8));
    }
  }
  return out;
}

PayloadPreimage pack_payload(const std::array<std::uint64_t, kSlotsPerPayload>& slots) {
  std::array<AttributeValue, kSlotsPerPayload> values;
  for (std::size_t s = 0; s < kSlotsPerPayload; ++s) values[s] = AttributeValue(slots[s]);
  return pack_payload(values);
}

PayloadPreimage unpack_payload(std::span<const std::uint8_t, kPayloadBits / 8> packed) {
  PayloadPreimage out;
  std::copy(packed.begin(), packed.end(), out.packed.begin());
  for (std::size_t i = kSlotsPerPayload * kAttributeBits; i < kPayloadBits; ++i) {
    if (out.bit(i)) throw MalformedInput("payload padding bits must be zero");
  }
  for (std::size_t s = 0; s < kSlotsPerPayload; ++s) {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < kAttributeBits; ++k) {
      v = (v << 1) | (out.bit(s * kAttributeBits + k) ? 1U : 0U);
    }
    out.slots[s] = AttributeValue(v);
  }
  return out;
}

Digest hash_payload(const PayloadPreimage& payload) { return sha256(payload.packed); }

PredicateMask PredicateMask::from_bits(std::uint64_t bits) {
  if (bits == 0 || bits > kAny) {
    throw RangeError("predicate mask must be in [1, 7], got " + std::to_string(bits));
  }
  PredicateMask m;
  m.bits_ = static_cast<std::uint8_t>(bits);
  return m;
}

PredicateMask PredicateMask::complement() const {
  return from_bits(static_cast<std::uint8_t>(~bits_) & kAny);
}

std::string_view PredicateMask::symbol() const {
  switch (bits_) {
    case kLt: return "<";
    case kEq: return "=";
    case kGt: return ">";
    case kLt | kEq: return "<=";
    case kEq | kGt: return ">=";
    case kLt | kGt: return "!=";
    default: return "any";
  }
}

PredicateMask encode_predicate(std::string_view symbol) {
  using M = PredicateMask;
  if (symbol == "<") return M::from_bits(M::kLt);
  if (symbol == "=") return M::from_bits(M::kEq);
  if (symbol == ">") return M::from_bits(M::kGt);
  if (symbol == "<=") return M::from_bits(M::kLt | M::kEq);
  if (symbol == ">=") return M::from_bits(M::kEq | M::kGt);
  if (symbol == "!=") return M::from_bits(M::kLt | M::kGt);
  if (symbol == "any") return M::any();
  throw ParseError("unknown predicate '" + std::string(symbol) + "'");
}

bool evaluate_predicate(PredicateMask mask, AttributeValue a, ReferenceValue r) {
  const std::uint8_t outcome = a.value() < r.value()    ? PredicateMask::kLt
                               : a.value() == r.value() ? PredicateMask::kEq
                                                        : PredicateMask::kGt;
  return (mask.bits() & outcome) != 0;
}

std::array<Fr, 2> digest_halves(const Digest& d) {
  std::array<std::uint8_t, 32> hi{};
  std::array<std::uint8_t, 32> lo{};
  std::copy(d.begin(), d.begin() + 16, hi.begin() + 16);
  std::copy(d.begin() + 16, d.end(), lo.begin() + 16);
  return {*Fr::from_bytes(hi), *Fr::from_bytes(lo)};
}

std::vector<Fr> PublicInput::field_elements() const {
  std::vector<Fr> out;
  out.reserve(arity());
  for (const auto& d : digests_) {
    const auto [hi, lo] = digest_halves(d);
    out.push_back(hi);
    out.push_back(lo);
  }
  for (const auto& m : masks_) out.push_back(Fr::from_u64(m.bits()));
  for (const auto& r : references_) out.push_back(Fr::from_u64(r.value()));
  return out;
}

Bytes PublicInput::serialize() const {
  ByteWriter w;
  w.u16(static_cast<std::uint16_t>(digests_.size()));
  for (const auto& d : digests_) w.bytes(d);
  for (const auto& m : masks_) w.u8(m.bits());
  for (const auto& r : references_) w.u64(r.value());
  return w.take();
}

PublicInput PublicInput::parse(std::span<const std::uint8_t> bytes) {
  try {
    ByteReader in(bytes);
    const std::size_t m = in.u16();
    std::vector<Digest> y(m);
    for (auto& d : y) {
      const auto b = in.fixed<32>();
      std::copy(b.begin(), b.end(), d.begin());
    }
    std::vector<PredicateMask> p;
    for (std::size_t i = 0; i < kSlotsPerPayload * m; ++i) p.push_back(PredicateMask::from_bits(in.u8()));
    std::vector<ReferenceValue> r;
    for (std::size_t i = 0; i < kSlotsPerPayload * m; ++i) r.emplace_back(in.u64());
    in.expect_end();
    return assemble_public_input(std::move(y), std::move(p), std::move(r));
  } catch (const RangeError& e) {
    throw MalformedInput(std::string("public input: ") + e.what());
  } catch (const ShapeError& e) {
    throw MalformedInput(std::string("public input: ") + e.what());
  }
}

PublicInput assemble_public_input(std::vector<Digest> y, std::vector<PredicateMask> p,
                                  std::vector<ReferenceValue> r) {
  if (y.empty()) throw ShapeError("public input needs at least one payload digest");
  if (p.size() != kSlotsPerPayload * y.size() || r.size() != kSlotsPerPayload * y.size()) {
    throw ShapeError("expected " + std::to_string(kSlotsPerPayload * y.size()) +
                     " masks and references, got " + std::to_string(p.size()) + " and " +
                     std::to_string(r.size()));
  }
  PublicInput x;
  x.digests_ = std::move(y);
  x.masks_ = std::move(p);
  x.references_ = std::move(r);
  return x;
}

}  // namespace zklaims::encoding
