#include "zklaims/random.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>

#include "zklaims/bytes.hpp"

namespace zklaims {

std::uint64_t RandomSource::next_u64() {
  std::array<std::uint8_t, 8> buf{};
  fill(buf);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
  return v;
}

void SystemRandom::fill(std::span<std::uint8_t> out) {
  ensure_sodium();
  randombytes_buf(out.data(), out.size());
}

SeededRandom::SeededRandom(const std::array<std::uint8_t, 32>& seed) : key_(seed) {}

SeededRandom::SeededRandom(std::uint64_t seed) {
  for (std::size_t i = 0; i < 8; ++i) key_[i] = static_cast<std::uint8_t>(seed >> (8 * i));
}

void SeededRandom::refill() {
  std::array<std::uint8_t, 64> zeros{};
  std::array<std::uint8_t, crypto_stream_chacha20_NONCEBYTES> nonce{};
  crypto_stream_chacha20_xor_ic(block_.data(), zeros.data(), zeros.size(), nonce.data(),
                                counter_++, key_.data());
  used_ = 0;
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == block_.size()) refill();
    const std::size_t n = std::min(out.size() - pos, block_.size() - used_);
    std::memcpy(out.data() + pos, block_.data() + used_, n);
    used_ += n;
    pos += n;
  }
}

}  // namespace zklaims
