#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "zklaims/algebra/curve.hpp"

namespace zklaims::algebra {

// Compressed encodings: big-endian x coordinate (c1 then c0 for Fq2) with
// the two spare top bits used as flags.
//   0x80  y is the lexicographically larger root
//   0x40  point at infinity (all other bits zero)
inline constexpr std::size_t kG1CompressedSize = 32;
inline constexpr std::size_t kG2CompressedSize = 64;

std::array<std::uint8_t, kG1CompressedSize> compress(const G1Affine& p);
std::array<std::uint8_t, kG2CompressedSize> compress(const G2Affine& p);

/// Returns nullopt for non-canonical or off-curve encodings.
std::optional<G1Affine> decompress_g1(std::span<const std::uint8_t, kG1CompressedSize> in);

/// With `check_subgroup`, also rejects points outside the order-r subgroup.
std::optional<G2Affine> decompress_g2(std::span<const std::uint8_t, kG2CompressedSize> in,
                                      bool check_subgroup);

// Uncompressed encodings (x then y, same field layout and infinity flag).
// Decoding only checks the curve equation, so it is cheap enough for bulk
// key material; G2 points decoded this way are not subgroup-checked.
inline constexpr std::size_t kG1UncompressedSize = 64;
inline constexpr std::size_t kG2UncompressedSize = 128;

std::array<std::uint8_t, kG1UncompressedSize> encode_uncompressed(const G1Affine& p);
std::array<std::uint8_t, kG2UncompressedSize> encode_uncompressed(const G2Affine& p);
std::optional<G1Affine> decode_uncompressed_g1(std::span<const std::uint8_t, kG1UncompressedSize> in);
std::optional<G2Affine> decode_uncompressed_g2(std::span<const std::uint8_t, kG2UncompressedSize> in);

}  // namespace zklaims::algebra
