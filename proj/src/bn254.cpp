#include <array>

#include "zklaims/algebra/curve.hpp"
#include "zklaims/algebra/pairing.hpp"

namespace zklaims::algebra {

namespace {

Fq fq(const char* decimal) {
  U256 v;
  for (const char* c = decimal; *c != '\0'; ++c) {
    // v = v * 10 + digit
    unsigned __int128 carry = static_cast<unsigned>(*c - '0');
    for (auto& l : v.limb) {
      const unsigned __int128 t = static_cast<unsigned __int128>(l) * 10 + carry;
      l = static_cast<std::uint64_t>(t);
      carry = t >> 64;
    }
  }
  return Fq::from_canonical(v);
}

// 6x + 2 for x = 4965661367192848881
constexpr U256 kAteLoopCount{{0x9d797039be763ba8ULL, 0x1ULL, 0, 0}};

// (q^2 + 1) * (q^4 - q^2 + 1) / r, little-endian limbs.
constexpr std::array<std::uint64_t, 20> kFinalExponent = [] {
  constexpr char hex[] =
      "fd14cc52f5b83fbdea556c23998e4150e578c5084015bb37f601919667af5051c6d1aa5afdd1707409206c"
      "82d647ec2d1ea74a391cae91d2e5726e39276a1ca64c0fd82eb59e1df6d76bdcf51b0d8a733cd65b14bb3b"
      "5c901bf1887c6042c758e4408ecc9952c0fcc420e48c3454c42ad1f5e50ef364494f69f6b84e09bf6a8ce2"
      "533be36c7a2d1138bf54d5bd1d4a5635f15967890515250a54036e3f812";
  std::array<std::uint64_t, 20> out{};
  std::size_t len = sizeof(hex) - 1;
  for (std::size_t i = 0; i < len; ++i) {
    const char c = hex[len - 1 - i];
    const std::uint64_t nibble = c <= '9' ? static_cast<std::uint64_t>(c - '0')
                                          : static_cast<std::uint64_t>(c - 'a' + 10);
    out[i / 16] |= nibble << (4 * (i % 16));
  }
  return out;
}();

Fq2 twist_frobenius_x() {
  return {fq("21575463638280843010398324269430826099269044274347216827212613867836435027261"),
          fq("10307601595873709700152284273816112264069230130616436755625194854815875713954")};
}

Fq2 twist_frobenius_y() {
  return {fq("2821565182194536844548159561693502659359617185244120367078079554186484126554"),
          fq("3505843767911556378687030309984248845540243509899259641013678093033130930403")};
}

// Homogeneous projective coordinates for the flipped Miller loop.
struct ProjectiveG2 {
  Fq2 x, y, z;
};

void doubling_step(const Fq& two_inv, ProjectiveG2& cur, G2Prepared::Line& line) {
  const Fq2 a = (cur.x * cur.y) * two_inv;
  const Fq2 b = cur.y.squared();
  const Fq2 c = cur.z.squared();
  const Fq2 d = c + c + c;
  const Fq2 e = G2Curve::b() * d;
  const Fq2 f = e + e + e;
  const Fq2 g = (b + f) * two_inv;
  const Fq2 h = (cur.y + cur.z).squared() - (b + c);
  const Fq2 i = e - b;
  const Fq2 j = cur.x.squared();
  const Fq2 e2 = e.squared();

  cur.x = a * (b - f);
  cur.y = g.squared() - (e2 + e2 + e2);
  cur.z = b * h;
  line.ell_0 = i.mul_by_nonresidue();
  line.ell_vw = -h;
  line.ell_vv = j + j + j;
}

void addition_step(const G2Affine& base, ProjectiveG2& cur, G2Prepared::Line& line) {
  const Fq2 d = cur.x - base.x * cur.z;
  const Fq2 e = cur.y - base.y * cur.z;
  const Fq2 f = d.squared();
  const Fq2 g = e.squared();
  const Fq2 h = d * f;
  const Fq2 i = cur.x * f;
  const Fq2 j = h + cur.z * g - (i + i);

  cur.x = d * j;
  cur.y = e * (i - j) - h * cur.y;
  cur.z = cur.z * h;
  line.ell_0 = (e * base.x - d * base.y).mul_by_nonresidue();
  line.ell_vv = -e;
  line.ell_vw = d;
}

G2Affine frobenius_twist(const G2Affine& q) {
  return {q.x.conjugate() * twist_frobenius_x(), q.y.conjugate() * twist_frobenius_y(), false};
}

Fq12 mul_by_line(const Fq12& f, const G2Prepared::Line& line, const G1Affine& p) {
  const Fq12 sparse{Fq6{line.ell_0, Fq2::zero(), line.ell_vv * p.x},
                    Fq6{Fq2::zero(), line.ell_vw * p.y, Fq2::zero()}};
  return f * sparse;
}

}  // namespace

Fq2 G2Curve::b() {
  static const Fq2 kB{
      fq("19485874751759354771024239261021720505790618469301721065564631296452457478373"),
      fq("266929791119991161246907387137283842545076965332900288569378510910307636690")};
  return kB;
}

G1Affine g1_generator() { return {Fq::from_u64(1), Fq::from_u64(2), false}; }

G2Affine g2_generator() {
  static const G2Affine kGen{
      Fq2{fq("10857046999023057135944570762232829481370756359578518086990519993285655852781"),
          fq("11559732032986387107991004021392285783925812861821192530917403151452391805634")},
      Fq2{fq("8495653923123431417604973247489272438418190587263600148770280649306958101930"),
          fq("4082367875863433681332203403145435568316851327593401208105741076214120093531")},
      false};
  return kGen;
}

std::optional<Fq2> Fq2::sqrt() const {
  if (is_zero()) return Fq2::zero();
  // p = 3 mod 4 (Adj, Rodriguez-Henriquez).
  U256 e = Fq::kModulus;
  sub_with_borrow(e, U256::from_u64(3));
  for (int i = 0; i < 4; ++i) e.limb[i] = (e.limb[i] >> 2) | (i < 3 ? e.limb[i + 1] << 62 : 0);
  const Fq2 a1 = pow(e.limb);
  const Fq2 alpha = a1.squared() * *this;
  const Fq2 a0 = alpha.conjugate() * alpha;
  const Fq2 minus_one{-Fq::one(), Fq::zero()};
  if (a0 == minus_one) return std::nullopt;
  const Fq2 x0 = a1 * *this;
  Fq2 x;
  if (alpha == minus_one) {
    x = Fq2{-x0.c1, x0.c0};
  } else {
    U256 half = Fq::kModulus;
    sub_with_borrow(half, U256::from_u64(1));
    for (int i = 0; i < 4; ++i) {
      half.limb[i] = (half.limb[i] >> 1) | (i < 3 ? half.limb[i + 1] << 63 : 0);
    }
    const Fq2 b = (Fq2::one() + alpha).pow(half.limb);
    x = b * x0;
  }
  if (x.squared() != *this) return std::nullopt;
  return x;
}

bool in_prime_subgroup(const G2Affine& q) {
  if (q.infinity) return true;
  return G2(q).mul(Fr::kModulus).is_identity();
}

G2Prepared prepare_g2(const G2Affine& q) {
  G2Prepared out;
  if (q.infinity) {
    out.infinity = true;
    return out;
  }
  const Fq two_inv = Fq::from_u64(2).inverse();
  ProjectiveG2 r{q.x, q.y, Fq2::one()};
  G2Prepared::Line line;
  for (std::size_t i = kAteLoopCount.num_bits() - 1; i-- > 0;) {
    doubling_step(two_inv, r, line);
    out.lines.push_back(line);
    if (kAteLoopCount.bit(i)) {
      addition_step(q, r, line);
      out.lines.push_back(line);
    }
  }
  const G2Affine q1 = frobenius_twist(q);
  G2Affine q2 = frobenius_twist(q1);
  q2.y = -q2.y;
  addition_step(q1, r, line);
  out.lines.push_back(line);
  addition_step(q2, r, line);
  out.lines.push_back(line);
  return out;
}

Fq12 miller_loop(const G1Affine& p, const G2Prepared& q) {
  if (p.infinity || q.infinity) return Fq12::one();
  Fq12 f = Fq12::one();
  std::size_t idx = 0;
  for (std::size_t i = kAteLoopCount.num_bits() - 1; i-- > 0;) {
    f = f.squared();
    f = mul_by_line(f, q.lines[idx++], p);
    if (kAteLoopCount.bit(i)) f = mul_by_line(f, q.lines[idx++], p);
  }
  f = mul_by_line(f, q.lines[idx++], p);
  f = mul_by_line(f, q.lines[idx++], p);
  return f;
}

Fq12 final_exponentiation(const Fq12& f) {
  // f^(q^6 - 1), then the remaining (q^2 + 1)(q^4 - q^2 + 1)/r.
  const Fq12 easy = f.conjugate() * f.inverse();
  return easy.pow(kFinalExponent);
}

Fq12 pairing(const G1Affine& p, const G2Affine& q) {
  return final_exponentiation(miller_loop(p, prepare_g2(q)));
}

Fq12 multi_pairing(std::span<const std::pair<G1Affine, G2Prepared>> terms) {
  Fq12 f = Fq12::one();
  for (const auto& [p, q] : terms) f = f * miller_loop(p, q);
  return final_exponentiation(f);
}

}  // namespace zklaims::algebra
