#pragma once

// Canonical encodings shared by native code and the constraint system:
// fixed-width attribute values, the 256-bit payload layout, 3-bit predicate
// masks and the public input vector x = y | p | r.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zklaims/algebra/bn254.hpp"
#include "zklaims/bytes.hpp"
#include "zklaims/errors.hpp"

namespace zklaims::encoding {

inline constexpr std::size_t kAttributeBits = 50;
inline constexpr std::size_t kSlotsPerPayload = 5;
inline constexpr std::size_t kPayloadBits = 256;
inline constexpr std::size_t kPaddingBits = kPayloadBits - kSlotsPerPayload * kAttributeBits;
inline constexpr std::uint64_t kValueLimit = std::uint64_t{1} << kAttributeBits;
/// Field elements contributed to x by one payload: two digest halves plus
/// one mask and one reference per slot.
inline constexpr std::size_t kFieldElementsPerPayload = 2 + 2 * kSlotsPerPayload;

/// Unsigned integer below 2^50. Dates are Unix seconds; strings and other
/// application values are mapped to integers by the caller.
template <class Tag>
class BoundedValue {
 public:
  constexpr BoundedValue() = default;
  explicit BoundedValue(std::uint64_t v) : value_(v) {
    if (v >= kValueLimit) {
      throw RangeError("value " + std::to_string(v) + " does not fit in 50 bits");
    }
  }

  constexpr std::uint64_t value() const { return value_; }

  friend constexpr auto operator<=>(const BoundedValue&, const BoundedValue&) = default;

 private:
  std::uint64_t value_ = 0;
};

using AttributeValue = BoundedValue<struct AttributeTag>;
using ReferenceValue = BoundedValue<struct ReferenceTag>;

/// Five attribute slots packed big-endian, 50 bits each from the most
/// significant end, followed by six zero bits.
struct PayloadPreimage {
  std::array<AttributeValue, kSlotsPerPayload> slots{};
  std::array<std::uint8_t, kPayloadBits / 8> packed{};

  bool bit(std::size_t i) const { return ((packed[i / 8] >> (7 - i % 8)) & 1U) != 0; }
};

PayloadPreimage pack_payload(const std::array<AttributeValue, kSlotsPerPayload>& slots);
/// Range-checks raw integers first (RangeError).
PayloadPreimage pack_payload(const std::array<std::uint64_t, kSlotsPerPayload>& slots);
/// Inverse of pack_payload; non-zero padding bits are MalformedInput.
PayloadPreimage unpack_payload(std::span<const std::uint8_t, kPayloadBits / 8> packed);

/// SHA-256 of the packed payload; the digest bound by the circuit.
Digest hash_payload(const PayloadPreimage& payload);

/// Selects which outcomes of the three-way comparison a <=> r satisfy the
/// predicate: bit0 = lt, bit1 = eq, bit2 = gt. Zero is never constructed.
class PredicateMask {
 public:
  static constexpr std::uint8_t kLt = 0b001;
  static constexpr std::uint8_t kEq = 0b010;
  static constexpr std::uint8_t kGt = 0b100;
  static constexpr std::uint8_t kAny = 0b111;

  constexpr PredicateMask() = default;  // "any"
  /// RangeError unless bits is in [1, 7].
  static PredicateMask from_bits(std::uint64_t bits);
  static constexpr PredicateMask any() { return PredicateMask(); }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_any() const { return bits_ == kAny; }
  /// Bitwise complement; RangeError for "any" (whose complement is empty).
  PredicateMask complement() const;
  /// One of "<", "=", ">", "<=", ">=", "!=", "any".
  std::string_view symbol() const;

  friend constexpr bool operator==(const PredicateMask&, const PredicateMask&) = default;

 private:
  std::uint8_t bits_ = kAny;
};

/// ParseError for anything outside {"<","=",">","<=",">=","!=","any"}.
PredicateMask encode_predicate(std::string_view symbol);

bool evaluate_predicate(PredicateMask mask, AttributeValue a, ReferenceValue r);

/// x = y | p | r: one digest per payload and one (mask, reference) per slot.
class PublicInput {
 public:
  PublicInput() = default;

  std::size_t payload_count() const { return digests_.size(); }
  std::size_t slot_count() const { return masks_.size(); }
  const std::vector<Digest>& digests() const { return digests_; }
  const std::vector<PredicateMask>& masks() const { return masks_; }
  const std::vector<ReferenceValue>& references() const { return references_; }

  /// [hi(y_0), lo(y_0), ..., hi(y_m-1), lo(y_m-1), p_0..p_5m-1, r_0..r_5m-1]
  std::vector<algebra::Fr> field_elements() const;
  std::size_t arity() const { return kFieldElementsPerPayload * payload_count(); }

  /// u16 payload count, digests, mask bytes, u64 references (little-endian).
  Bytes serialize() const;
  static PublicInput parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const PublicInput&, const PublicInput&) = default;

 private:
  friend PublicInput assemble_public_input(std::vector<Digest>, std::vector<PredicateMask>,
                                           std::vector<ReferenceValue>);

  std::vector<Digest> digests_;
  std::vector<PredicateMask> masks_;
  std::vector<ReferenceValue> references_;
};

/// ShapeError unless |p| = |r| = 5 |y| and |y| > 0.
PublicInput assemble_public_input(std::vector<Digest> y, std::vector<PredicateMask> p,
                                  std::vector<ReferenceValue> r);

/// High and low 128-bit halves of a digest as field elements.
std::array<algebra::Fr, 2> digest_halves(const Digest& d);

}  // namespace zklaims::encoding
