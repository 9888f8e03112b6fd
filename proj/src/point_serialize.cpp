#include "zklaims/algebra/serialize.hpp"

#include <algorithm>

namespace zklaims::algebra {

namespace {

constexpr std::uint8_t kLargestFlag = 0x80;
constexpr std::uint8_t kInfinityFlag = 0x40;
constexpr std::uint8_t kFlagMask = kLargestFlag | kInfinityFlag;

template <std::size_t N>
bool all_zero_after_flags(std::span<const std::uint8_t, N> in) {
  if ((in[0] & static_cast<std::uint8_t>(~kFlagMask)) != 0) return false;
  return std::all_of(in.begin() + 1, in.end(), [](std::uint8_t b) { return b == 0; });
}

std::optional<Fq> read_fq(std::span<const std::uint8_t, 32> in, bool strip_flags) {
  std::array<std::uint8_t, 32> buf{};
  std::copy(in.begin(), in.end(), buf.begin());
  if (strip_flags) buf[0] &= static_cast<std::uint8_t>(~kFlagMask);
  return Fq::from_bytes(buf);
}

}  // namespace

std::array<std::uint8_t, kG1CompressedSize> compress(const G1Affine& p) {
  std::array<std::uint8_t, kG1CompressedSize> out{};
  if (p.infinity) {
    out[0] = kInfinityFlag;
    return out;
  }
  out = p.x.to_bytes();
  if (p.y.is_lexicographically_largest()) out[0] |= kLargestFlag;
  return out;
}

std::array<std::uint8_t, kG2CompressedSize> compress(const G2Affine& p) {
  std::array<std::uint8_t, kG2CompressedSize> out{};
  if (p.infinity) {
    out[0] = kInfinityFlag;
    return out;
  }
  const auto hi = p.x.c1.to_bytes();
  const auto lo = p.x.c0.to_bytes();
  std::copy(hi.begin(), hi.end(), out.begin());
  std::copy(lo.begin(), lo.end(), out.begin() + 32);
  if (p.y.is_lexicographically_largest()) out[0] |= kLargestFlag;
  return out;
}

std::optional<G1Affine> decompress_g1(std::span<const std::uint8_t, kG1CompressedSize> in) {
  const std::uint8_t flags = in[0] & kFlagMask;
  if ((flags & kInfinityFlag) != 0) {
    if (flags != kInfinityFlag || !all_zero_after_flags(in)) return std::nullopt;
    return G1Affine::identity();
  }
  const auto x = read_fq(in, true);
  if (!x) return std::nullopt;
  const auto y = (x->squared() * *x + G1Curve::b()).sqrt();
  if (!y) return std::nullopt;
  G1Affine p{*x, *y, false};
  if (p.y.is_lexicographically_largest() != ((flags & kLargestFlag) != 0)) p.y = -p.y;
  return p;
}

std::optional<G2Affine> decompress_g2(std::span<const std::uint8_t, kG2CompressedSize> in,
                                      bool check_subgroup) {
  const std::uint8_t flags = in[0] & kFlagMask;
  if ((flags & kInfinityFlag) != 0) {
    if (flags != kInfinityFlag || !all_zero_after_flags(in)) return std::nullopt;
    return G2Affine::identity();
  }
  const auto c1 = read_fq(in.subspan<0, 32>(), true);
  const auto c0 = read_fq(in.subspan<32, 32>(), false);
  if (!c1 || !c0) return std::nullopt;
  const Fq2 x{*c0, *c1};
  const auto y = (x.squared() * x + G2Curve::b()).sqrt();
  if (!y) return std::nullopt;
  G2Affine p{x, *y, false};
  if (p.y.is_lexicographically_largest() != ((flags & kLargestFlag) != 0)) p.y = -p.y;
  if (check_subgroup && !in_prime_subgroup(p)) return std::nullopt;
  return p;
}

namespace {

void put_fq(std::uint8_t* out, const Fq& v) {
  const auto b = v.to_bytes();
  std::copy(b.begin(), b.end(), out);
}

std::optional<Fq> get_fq(const std::uint8_t* in) {
  return Fq::from_bytes(std::span<const std::uint8_t, 32>(in, 32));
}

template <std::size_t N>
bool is_infinity_encoding(std::span<const std::uint8_t, N> in) {
  return in[0] == kInfinityFlag &&
         std::all_of(in.begin() + 1, in.end(), [](std::uint8_t b) { return b == 0; });
}

}  // namespace

std::array<std::uint8_t, kG1UncompressedSize> encode_uncompressed(const G1Affine& p) {
  std::array<std::uint8_t, kG1UncompressedSize> out{};
  if (p.infinity) {
    out[0] = kInfinityFlag;
    return out;
  }
  put_fq(out.data(), p.x);
  put_fq(out.data() + 32, p.y);
  return out;
}

std::array<std::uint8_t, kG2UncompressedSize> encode_uncompressed(const G2Affine& p) {
  std::array<std::uint8_t, kG2UncompressedSize> out{};
  if (p.infinity) {
    out[0] = kInfinityFlag;
    return out;
  }
  put_fq(out.data(), p.x.c1);
  put_fq(out.data() + 32, p.x.c0);
  put_fq(out.data() + 64, p.y.c1);
  put_fq(out.data() + 96, p.y.c0);
  return out;
}

std::optional<G1Affine> decode_uncompressed_g1(std::span<const std::uint8_t, kG1UncompressedSize> in) {
  if (is_infinity_encoding(in)) return G1Affine::identity();
  const auto x = get_fq(in.data());
  const auto y = get_fq(in.data() + 32);
  if (!x || !y) return std::nullopt;
  const G1Affine p{*x, *y, false};
  if (!p.is_on_curve()) return std::nullopt;
  return p;
}

std::optional<G2Affine> decode_uncompressed_g2(std::span<const std::uint8_t, kG2UncompressedSize> in) {
  if (is_infinity_encoding(in)) return G2Affine::identity();
  const auto x1 = get_fq(in.data());
  const auto x0 = get_fq(in.data() + 32);
  const auto y1 = get_fq(in.data() + 64);
  const auto y0 = get_fq(in.data() + 96);
  if (!x1 || !x0 || !y1 || !y0) return std::nullopt;
  const G2Affine p{Fq2{*x0, *x1}, Fq2{*y0, *y1}, false};
  if (!p.is_on_curve()) return std::nullopt;
  return p;
}

}  // namespace zklaims::algebra
