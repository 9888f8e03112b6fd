#pragma once

// BN254 (alt_bn128) base field, scalar field and the Fq2/Fq6/Fq12 tower
// used by the optimal ate pairing.
//
//   Fq2  = Fq[u]  / (u^2 + 1)
//   Fq6  = Fq2[v] / (v^3 - xi),  xi = 9 + u
//   Fq12 = Fq6[w] / (w^2 - v)

#include <cstdint>
#include <optional>

#include "zklaims/algebra/field.hpp"

namespace zklaims::algebra {

struct FqParams {
  static constexpr U256 kModulus{{0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                  0xb85045b68181585dULL, 0x30644e72e131a029ULL}};
  static constexpr U256 kR{{0xd35d438dc58f0d9dULL, 0x0a78eb28f5c70b3dULL, 0x666ea36f7879462cULL,
                            0x0e0a77c19a07df2fULL}};
  static constexpr U256 kR2{{0xf32cfc5b538afa89ULL, 0xb5e71911d44501fbULL,
                             0x47ab1eff0a417ff6ULL, 0x06d89f71cab8351fULL}};
  static constexpr std::uint64_t kInv = 0x87d20782e4866389ULL;
};

struct FrParams {
  static constexpr U256 kModulus{{0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                  0xb85045b68181585dULL, 0x30644e72e131a029ULL}};
  static constexpr U256 kR{{0xac96341c4ffffffbULL, 0x36fc76959f60cd29ULL, 0x666ea36f7879462eULL,
                            0x0e0a77c19a07df2fULL}};
  static constexpr U256 kR2{{0x1bb8e645ae216da7ULL, 0x53fe3ab1e35c59e3ULL,
                             0x8c49833d53bb8085ULL, 0x0216d0b17f4e44a5ULL}};
  static constexpr std::uint64_t kInv = 0xc2e1f593efffffffULL;

  static constexpr std::size_t kTwoAdicity = 28;
  /// 5^((r-1)/2^28), a primitive 2^28-th root of unity.
  static constexpr U256 kRootOfUnity{{0x9bd61b6e725b19f0ULL, 0x402d111e41112ed4ULL,
                                      0x00e0a7eb8ef62abcULL, 0x2a3c09f0a58a7e85ULL}};
  static constexpr std::uint64_t kMultiplicativeGenerator = 5;
};

using Fq = Fp<FqParams>;
using Fr = Fp<FrParams>;

class Fq2 {
 public:
  Fq c0, c1;

  Fq2() = default;
  Fq2(const Fq& a, const Fq& b) : c0(a), c1(b) {}

  static Fq2 zero() { return {}; }
  static Fq2 one() { return {Fq::one(), Fq::zero()}; }
  /// xi = 9 + u
  static Fq2 nonresidue() { return {Fq::from_u64(9), Fq::one()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

  Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fq2 operator-() const { return {-c0, -c1}; }
  Fq2& operator+=(const Fq2& o) { return *this = *this + o; }
  Fq2& operator-=(const Fq2& o) { return *this = *this - o; }

  Fq2 operator*(const Fq2& o) const {
    const Fq v0 = c0 * o.c0;
    const Fq v1 = c1 * o.c1;
    return {v0 - v1, (c0 + c1) * (o.c0 + o.c1) - v0 - v1};
  }
  Fq2& operator*=(const Fq2& o) { return *this = *this * o; }
  Fq2 operator*(const Fq& s) const { return {c0 * s, c1 * s}; }

  Fq2 squared() const {
    const Fq ab = c0 * c1;
    return {(c0 + c1) * (c0 - c1), ab + ab};
  }
  Fq2 doubled() const { return *this + *this; }

  Fq2 inverse() const {
    const Fq t = (c0.squared() + c1.squared()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  Fq2 conjugate() const { return {c0, -c1}; }

  /// Multiplication by xi = 9 + u.
  Fq2 mul_by_nonresidue() const {
    const Fq nine_c0 = c0.doubled().doubled().doubled() + c0;
    const Fq nine_c1 = c1.doubled().doubled().doubled() + c1;
    return {nine_c0 - c1, c0 + nine_c1};
  }

  Fq2 pow(std::span<const std::uint64_t> e) const {
    Fq2 acc = one();
    for (std::size_t i = e.size() * 64; i-- > 0;) {
      acc = acc.squared();
      if (((e[i / 64] >> (i % 64)) & 1U) != 0) acc = acc * *this;
    }
    return acc;
  }

  std::optional<Fq2> sqrt() const;

  bool is_lexicographically_largest() const {
    if (!c1.is_zero()) return c1.is_lexicographically_largest();
    return c0.is_lexicographically_largest();
  }

  friend bool operator==(const Fq2&, const Fq2&) = default;
};

class Fq6 {
 public:
  Fq2 c0, c1, c2;

  Fq6() = default;
  Fq6(const Fq2& a, const Fq2& b, const Fq2& c) : c0(a), c1(b), c2(c) {}

  static Fq6 zero() { return {}; }
  static Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

  Fq6 operator+(const Fq6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fq6 operator-(const Fq6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fq6 operator-() const { return {-c0, -c1, -c2}; }

  Fq6 operator*(const Fq6& o) const {
    const Fq2 v0 = c0 * o.c0;
    const Fq2 v1 = c1 * o.c1;
    const Fq2 v2 = c2 * o.c2;
    return {v0 + ((c1 + c2) * (o.c1 + o.c2) - v1 - v2).mul_by_nonresidue(),
            (c0 + c1) * (o.c0 + o.c1) - v0 - v1 + v2.mul_by_nonresidue(),
            (c0 + c2) * (o.c0 + o.c2) - v0 + v1 - v2};
  }

  Fq6 squared() const { return *this * *this; }

  /// Multiplication by v.
  Fq6 mul_by_nonresidue() const { return {c2.mul_by_nonresidue(), c0, c1}; }

  Fq6 inverse() const {
    const Fq2 t0 = c0.squared();
    const Fq2 t1 = c1.squared();
    const Fq2 t2 = c2.squared();
    const Fq2 t3 = c0 * c1;
    const Fq2 t4 = c0 * c2;
    const Fq2 t5 = c1 * c2;
    const Fq2 s0 = t0 - t5.mul_by_nonresidue();
    const Fq2 s1 = t2.mul_by_nonresidue() - t3;
    const Fq2 s2 = t1 - t4;
    const Fq2 a1 = c2 * s1;
    const Fq2 a2 = c1 * s2;
    const Fq2 a3 = (a1 + a2).mul_by_nonresidue();
    const Fq2 t6 = (c0 * s0 + a3).inverse();
    return {t6 * s0, t6 * s1, t6 * s2};
  }

  friend bool operator==(const Fq6&, const Fq6&) = default;
};

class Fq12 {
 public:
  Fq6 c0, c1;

  Fq12() = default;
  Fq12(const Fq6& a, const Fq6& b) : c0(a), c1(b) {}

  static Fq12 one() { return {Fq6::one(), Fq6::zero()}; }

  bool is_one() const { return *this == one(); }

  Fq12 operator*(const Fq12& o) const {
    const Fq6 v0 = c0 * o.c0;
    const Fq6 v1 = c1 * o.c1;
    return {v0 + v1.mul_by_nonresidue(), (c0 + c1) * (o.c0 + o.c1) - v0 - v1};
  }
  Fq12& operator*=(const Fq12& o) { return *this = *this * o; }

  Fq12 squared() const {
    const Fq6 ab = c0 * c1;
    return {(c0 + c1) * (c0 + c1.mul_by_nonresidue()) - ab - ab.mul_by_nonresidue(), ab + ab};
  }

  Fq12 inverse() const {
    const Fq6 t = (c0.squared() - c1.squared().mul_by_nonresidue()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  /// x^(q^6); equals the inverse on the cyclotomic subgroup.
  Fq12 conjugate() const { return {c0, -c1}; }

  Fq12 pow(std::span<const std::uint64_t> e) const {
    Fq12 acc = one();
    for (std::size_t i = e.size() * 64; i-- > 0;) {
      acc = acc.squared();
      if (((e[i / 64] >> (i % 64)) & 1U) != 0) acc = acc * *this;
    }
    return acc;
  }

  friend bool operator==(const Fq12&, const Fq12&) = default;
};

}  // namespace zklaims::algebra
