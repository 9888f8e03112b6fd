#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace zklaims {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  std::uint64_t next_u64();
};

/// Operating-system CSPRNG.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// ChaCha20 keystream under a 32-byte seed. Reproducible; for tests and
/// seeded setups only.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(const std::array<std::uint8_t, 32>& seed);
  /// Expands a small integer into a seed; convenient in tests.
  explicit SeededRandom(std::uint64_t seed);

  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::array<std::uint8_t, 64> block_{};
  std::size_t used_ = 64;
  std::uint64_t counter_ = 0;
};

}  // namespace zklaims
