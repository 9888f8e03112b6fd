#include <gtest/gtest.h>

#include "zklaims/bytes.hpp"
#include "zklaims/gadgets.hpp"
#include "zklaims/random.hpp"

namespace zklaims::gadgets {
namespace {

// Single-block padding for a 32-byte message: 1 bit, zeros, length 256.
std::array<Bit, 512> padded_block(Builder& b, const std::array<std::uint8_t, 32>& msg, bool allocate) {
  std::array<Bit, 512> block;
  for (std::size_t i = 0; i < 512; ++i) block[i] = Bit::constant(false);
  for (std::size_t i = 0; i < 256; ++i) {
    const bool v = ((msg[i / 8] >> (7 - i % 8)) & 1U) != 0;
    block[i] = allocate ? b.alloc_bit(v) : Bit::constant(v);
  }
  block[256] = Bit::constant(true);
  block[503] = Bit::constant(true);  // 256 = 0x100
  return block;
}

std::array<std::uint8_t, 32> digest_bytes(const Builder& b, const std::array<Bit, 256>& bits) {
  std::array<std::uint8_t, 32> out{};
  for (std::size_t i = 0; i < 256; ++i) {
    if (b.value(bits[i])) out[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
  }
  return out;
}

TEST(Sha256Gadget, MatchesReferenceHash) {
  SeededRandom rng(5);
  for (int round = 0; round < 4; ++round) {
    std::array<std::uint8_t, 32> msg{};
    if (round > 0) rng.fill(msg);
    Builder b(true);
    const auto digest = sha256_compress(b, padded_block(b, msg, true));
    EXPECT_EQ(digest_bytes(b, digest), sha256(msg));
    const auto cs = b.finish_system();
    const auto z = b.finish_assignment();
    EXPECT_TRUE(cs.is_satisfied(z));
  }
}

TEST(Sha256Gadget, ConstantInputFoldsAway) {
  const std::array<std::uint8_t, 32> msg{1, 2, 3};
  Builder b(true);
  const auto digest = sha256_compress(b, padded_block(b, msg, false));
  EXPECT_EQ(digest_bytes(b, digest), sha256(msg));
}

TEST(Sha256Gadget, FlippedWitnessBitViolatesConstraints) {
  std::array<std::uint8_t, 32> msg{};
  msg[4] = 0x5a;
  Builder b(true);
  const auto block = padded_block(b, msg, true);
  sha256_compress(b, block);
  const auto cs = b.finish_system();
  auto z = b.finish_assignment();
  // Changing a message bit without recomputing the rest of the trace.
  z[block[37].index] = z[block[37].index].is_zero() ? Fr::one() : Fr::zero();
  EXPECT_FALSE(cs.is_satisfied(z));
}

TEST(ComparisonGadget, OutcomesAndMasks) {
  for (std::uint64_t mask = 1; mask <= 7; ++mask) {
    for (std::uint64_t v = 0; v < 8; ++v) {
      for (std::uint64_t r = 0; r < 8; ++r) {
        Builder b(true);
        const Variable ref = b.alloc_input(Fr::from_u64(r));
        const Variable m = b.alloc_input(Fr::from_u64(mask));
        const Variable val = b.alloc(Fr::from_u64(v));
        b.decompose(val, 3);
        const auto w = enforce_masked_comparison(b, val, ref, m, 3);
        EXPECT_EQ(b.value(w.ge).is_one(), v >= r);
        EXPECT_EQ(b.value(w.eq).is_one(), v == r);
        EXPECT_EQ(b.value(w.gt).is_one(), v > r);
        const std::uint64_t outcome = v < r ? 1 : v == r ? 2 : 4;
        const auto cs = b.finish_system();
        const auto z = b.finish_assignment();
        EXPECT_EQ(cs.is_satisfied(z), (mask & outcome) != 0) << mask << " " << v << " " << r;
      }
    }
  }
}

TEST(ComparisonGadget, RejectsMaskZeroAndOutOfRangeReference) {
  for (const auto& [mask, ref] : {std::pair<std::uint64_t, std::uint64_t>{0, 3},
                                  std::pair<std::uint64_t, std::uint64_t>{7, 9}}) {
    Builder b(true);
    const Variable r = b.alloc_input(Fr::from_u64(ref));
    const Variable m = b.alloc_input(Fr::from_u64(mask));
    const Variable val = b.alloc(Fr::from_u64(3));
    b.decompose(val, 3);
    enforce_masked_comparison(b, val, r, m, 3);
    const auto cs = b.finish_system();
    const auto z = b.finish_assignment();
    EXPECT_FALSE(cs.is_satisfied(z));
  }
}

}  // namespace
}  // namespace zklaims::gadgets
