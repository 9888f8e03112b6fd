#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zklaims/algebra/bigint.hpp"
#include "zklaims/random.hpp"

namespace zklaims::algebra {

namespace detail {

// Montgomery product a*b*2^-256 mod p. CIOS without the two overflow limbs,
// valid because the top limb of p is below 2^63 - 1.
[[gnu::always_inline]] inline U256 mont_mul(const U256& a, const U256& b, const U256& p, std::uint64_t inv) {
  using u128 = unsigned __int128;
  std::uint64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0;
  for (int i = 0; i < 4; ++i) {
    const std::uint64_t ai = a.limb[i];
    u128 acc = static_cast<u128>(ai) * b.limb[0] + t0;
    std::uint64_t carry_a = static_cast<std::uint64_t>(acc >> 64);
    t0 = static_cast<std::uint64_t>(acc);
    const std::uint64_t m = t0 * inv;
    u128 red = static_cast<u128>(m) * p.limb[0] + t0;
    std::uint64_t carry_r = static_cast<std::uint64_t>(red >> 64);

    acc = static_cast<u128>(ai) * b.limb[1] + t1 + carry_a;
    carry_a = static_cast<std::uint64_t>(acc >> 64);
    red = static_cast<u128>(m) * p.limb[1] + static_cast<std::uint64_t>(acc) + carry_r;
    carry_r = static_cast<std::uint64_t>(red >> 64);
    t0 = static_cast<std::uint64_t>(red);

    acc = static_cast<u128>(ai) * b.limb[2] + t2 + carry_a;
    carry_a = static_cast<std::uint64_t>(acc >> 64);
    red = static_cast<u128>(m) * p.limb[2] + static_cast<std::uint64_t>(acc) + carry_r;
    carry_r = static_cast<std::uint64_t>(red >> 64);
    t1 = static_cast<std::uint64_t>(red);

    acc = static_cast<u128>(ai) * b.limb[3] + t3 + carry_a;
    carry_a = static_cast<std::uint64_t>(acc >> 64);
    red = static_cast<u128>(m) * p.limb[3] + static_cast<std::uint64_t>(acc) + carry_r;
    carry_r = static_cast<std::uint64_t>(red >> 64);
    t2 = static_cast<std::uint64_t>(red);

    t3 = carry_a + carry_r;
  }
  U256 out{{t0, t1, t2, t3}};
  if (compare(out, p) >= 0) sub_with_borrow(out, p);
  return out;
}

}  // namespace detail

/// Prime field element held in Montgomery form. `Params` supplies the
/// modulus and the Montgomery constants R mod p, R^2 mod p, -p^-1 mod 2^64.
template <class Params>
class Fp {
 public:
  static constexpr U256 kModulus = Params::kModulus;

  constexpr Fp() = default;

  static Fp zero() { return Fp{}; }
  static Fp one() { return from_mont(Params::kR); }

  static Fp from_u64(std::uint64_t v) { return from_canonical(U256::from_u64(v)); }

  /// `v` must already be reduced.
  static Fp from_canonical(const U256& v) {
    return from_mont(detail::mont_mul(v, Params::kR2, kModulus, Params::kInv));
  }

  /// Big-endian canonical bytes; rejects values >= p.
  static std::optional<Fp> from_bytes(std::span<const std::uint8_t, 32> bytes) {
    const U256 v = U256::from_be_bytes(bytes);
    if (compare(v, kModulus) >= 0) return std::nullopt;
    return from_canonical(v);
  }

  /// Interprets 32 bytes as an integer and reduces it mod p.
  static Fp from_bytes_reduced(std::span<const std::uint8_t, 32> bytes) {
    U256 v = U256::from_be_bytes(bytes);
    while (compare(v, kModulus) >= 0) sub_with_borrow(v, kModulus);
    return from_canonical(v);
  }

  /// Uniform sample by rejection over the bit length of p.
  static Fp random(RandomSource& rng) {
    const std::size_t top_bits = kModulus.num_bits() % 64;
    const std::uint64_t top_mask =
        top_bits == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    for (;;) {
      std::array<std::uint8_t, 32> buf{};
      rng.fill(buf);
      U256 v;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 8; ++k) v.limb[i] |= std::uint64_t{buf[i * 8 + k]} << (8 * k);
      }
      v.limb[3] &= top_mask;
      if (compare(v, kModulus) < 0) return from_canonical(v);
    }
  }

  U256 to_canonical() const {
    return detail::mont_mul(mont_, U256::from_u64(1), kModulus, Params::kInv);
  }

  std::array<std::uint8_t, 32> to_bytes() const { return to_canonical().to_be_bytes(); }

  bool is_zero() const { return mont_.is_zero(); }
  bool is_one() const { return mont_ == Params::kR; }

  Fp operator+(const Fp& o) const {
    Fp r = *this;
    r += o;
    return r;
  }
  Fp operator-(const Fp& o) const {
    Fp r = *this;
    r -= o;
    return r;
  }
  Fp operator*(const Fp& o) const {
    return from_mont(detail::mont_mul(mont_, o.mont_, kModulus, Params::kInv));
  }
  Fp operator-() const {
    if (is_zero()) return *this;
    U256 v = kModulus;
    sub_with_borrow(v, mont_);
    return from_mont(v);
  }
  Fp& operator+=(const Fp& o) {
    add_with_carry(mont_, o.mont_);
    if (compare(mont_, kModulus) >= 0) sub_with_borrow(mont_, kModulus);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    if (sub_with_borrow(mont_, o.mont_) != 0) add_with_carry(mont_, kModulus);
    return *this;
  }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp squared() const { return *this * *this; }
  Fp doubled() const { return *this + *this; }

  Fp pow(const U256& e) const { return pow(std::span<const std::uint64_t>(e.limb)); }

  /// Exponent given as little-endian 64-bit limbs.
  Fp pow(std::span<const std::uint64_t> e) const {
    Fp acc = one();
    bool started = false;
    for (std::size_t i = e.size() * 64; i-- > 0;) {
      if (started) acc = acc.squared();
      if (((e[i / 64] >> (i % 64)) & 1U) != 0) {
        acc = started ? acc * *this : *this;
        started = true;
      }
    }
    return acc;
  }

  /// Multiplicative inverse; zero maps to zero.
  Fp inverse() const {
    U256 e = kModulus;
    sub_with_borrow(e, U256::from_u64(2));
    return pow(e);
  }

  /// Square root for p = 3 mod 4.
  std::optional<Fp> sqrt() const {
    static_assert((Params::kModulus.limb[0] & 3U) == 3U, "sqrt requires p = 3 mod 4");
    U256 e = kModulus;
    add_with_carry(e, U256::from_u64(1));
    // (p + 1) / 4
    for (int i = 0; i < 4; ++i) {
      e.limb[i] = (e.limb[i] >> 2) | (i < 3 ? e.limb[i + 1] << 62 : 0);
    }
    Fp r = pow(e);
    if (r.squared() != *this) return std::nullopt;
    return r;
  }

  /// True when the canonical value exceeds (p - 1) / 2.
  bool is_lexicographically_largest() const {
    U256 v = to_canonical();
    U256 half = kModulus;
    for (int i = 0; i < 4; ++i) {
      half.limb[i] = (half.limb[i] >> 1) | (i < 3 ? half.limb[i + 1] << 63 : 0);
    }
    return compare(v, half) > 0;
  }

  friend bool operator==(const Fp& a, const Fp& b) { return a.mont_ == b.mont_; }

  const U256& mont() const { return mont_; }

 private:
  static Fp from_mont(const U256& v) {
    Fp r;
    r.mont_ = v;
    return r;
  }

  U256 mont_{};
};

/// Montgomery batch inversion; zero entries stay zero.
template <class F>
void batch_invert(std::span<F> values) {
  std::vector<F> prefix(values.size());
  F acc = F::one();
  for (std::size_t i = 0; i < values.size(); ++i) {
    prefix[i] = acc;
    if (!values[i].is_zero()) acc = acc * values[i];
  }
  F inv = acc.inverse();
  for (std::size_t i = values.size(); i-- > 0;) {
    if (values[i].is_zero()) continue;
    const F next = inv * values[i];
    values[i] = inv * prefix[i];
    inv = next;
  }
}

}  // namespace zklaims::algebra
