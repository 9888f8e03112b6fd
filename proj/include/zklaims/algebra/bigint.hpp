#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace zklaims::algebra {

/// Fixed 256-bit unsigned integer, little-endian 64-bit limbs.
struct U256 {
  std::array<std::uint64_t, 4> limb{};

  static constexpr U256 from_u64(std::uint64_t v) { return U256{{v, 0, 0, 0}}; }

  constexpr bool bit(std::size_t i) const {
    return i < 256 && ((limb[i / 64] >> (i % 64)) & 1U) != 0;
  }

  constexpr std::size_t num_bits() const {
    for (int i = 3; i >= 0; --i) {
      if (limb[i] != 0) {
        return static_cast<std::size_t>(i) * 64 + 64 -
               static_cast<std::size_t>(__builtin_clzll(limb[i]));
      }
    }
    return 0;
  }

  constexpr bool is_zero() const {
    return (limb[0] | limb[1] | limb[2] | limb[3]) == 0;
  }

  /// Reads `count` bits starting at `offset` (count <= 64).
  /// `count` (at most 64) bits starting at `offset`, little-endian.
  constexpr std::uint64_t bits(std::size_t offset, std::size_t count) const {
    if (count == 0 || offset >= 256) return 0;
    const std::size_t li = offset / 64;
    const std::size_t sh = offset % 64;
    std::uint64_t v = limb[li] >> sh;
    if (sh != 0 && li + 1 < 4) v |= limb[li + 1] << (64 - sh);
    return count >= 64 ? v : v & ((std::uint64_t{1} << count) - 1);
  }

  friend constexpr bool operator==(const U256&, const U256&) = default;

  friend constexpr int compare(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i] ? -1 : 1;
    }
    return 0;
  }

  static constexpr U256 from_be_bytes(std::span<const std::uint8_t, 32> in) {
    U256 out;
    for (std::size_t i = 0; i < 32; ++i) {
      out.limb[3 - i / 8] |= std::uint64_t{in[i]} << (8 * (7 - i % 8));
    }
    return out;
  }

  constexpr std::array<std::uint8_t, 32> to_be_bytes() const {
    std::array<std::uint8_t, 32> out{};
    for (std::size_t i = 0; i < 32; ++i) {
      out[i] = static_cast<std::uint8_t>(limb[3 - i / 8] >> (8 * (7 - i % 8)));
    }
    return out;
  }
};

/// a - b, returning the borrow.
constexpr std::uint64_t sub_with_borrow(U256& a, const U256& b) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const unsigned __int128 d = static_cast<unsigned __int128>(a.limb[i]) - b.limb[i] - borrow;
    a.limb[i] = static_cast<std::uint64_t>(d);
    borrow = static_cast<std::uint64_t>(d >> 64) & 1U;
  }
  return borrow;
}

/// a + b, returning the carry.
constexpr std::uint64_t add_with_carry(U256& a, const U256& b) {
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const unsigned __int128 s = static_cast<unsigned __int128>(a.limb[i]) + b.limb[i] + carry;
    a.limb[i] = static_cast<std::uint64_t>(s);
    carry = static_cast<std::uint64_t>(s >> 64);
  }
  return carry;
}

}  // namespace zklaims::algebra
