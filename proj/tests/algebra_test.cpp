#include <gtest/gtest.h>

#include "zklaims/algebra/fft.hpp"
#include "zklaims/algebra/msm.hpp"
#include "zklaims/algebra/pairing.hpp"
#include "zklaims/algebra/serialize.hpp"
#include "zklaims/random.hpp"

namespace zklaims::algebra {
namespace {

TEST(FieldTest, InverseAndSqrt) {
  SeededRandom rng(1);
  for (int i = 0; i < 50; ++i) {
    const Fq a = Fq::random(rng);
    if (a.is_zero()) continue;
    EXPECT_TRUE((a * a.inverse()).is_one());
    const auto s = a.squared().sqrt();
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->squared(), a.squared());
    const Fr b = Fr::random(rng);
    EXPECT_TRUE((b * b.inverse()).is_one());
  }
}

TEST(FieldTest, CanonicalRoundTrip) {
  SeededRandom rng(2);
  for (int i = 0; i < 100; ++i) {
    const Fr a = Fr::random(rng);
    const auto back = Fr::from_bytes(a.to_bytes());
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, a);
  }
  EXPECT_EQ(Fr::from_u64(7).to_canonical(), U256::from_u64(7));
  EXPECT_EQ((Fr::from_u64(6) * Fr::from_u64(7)).to_canonical(), U256::from_u64(42));
  EXPECT_EQ((Fr::zero() - Fr::one() + Fr::from_u64(2)), Fr::one());
}

TEST(FieldTest, RootOfUnityOrder) {
  Fr w = Fr::from_canonical(FrParams::kRootOfUnity);
  for (std::size_t i = 0; i + 1 < FrParams::kTwoAdicity; ++i) w = w.squared();
  EXPECT_EQ(w, -Fr::one());
}

TEST(TowerTest, InversesAndSqrt) {
  SeededRandom rng(3);
  auto rand2 = [&] { return Fq2{Fq::random(rng), Fq::random(rng)}; };
  for (int i = 0; i < 20; ++i) {
    const Fq2 a = rand2();
    EXPECT_EQ(a * a.inverse(), Fq2::one());
    const auto s = a.squared().sqrt();
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->squared(), a.squared());
    const Fq6 b{rand2(), rand2(), rand2()};
    EXPECT_EQ(b * b.inverse(), Fq6::one());
    const Fq12 c{b, Fq6{rand2(), rand2(), rand2()}};
    EXPECT_TRUE((c * c.inverse()).is_one());
    EXPECT_EQ(c.squared(), c * c);
  }
}

TEST(CurveTest, GeneratorsOnCurveAndInSubgroup) {
  EXPECT_TRUE(g1_generator().is_on_curve());
  EXPECT_TRUE(g2_generator().is_on_curve());
  EXPECT_TRUE(G1(g1_generator()).mul(Fr::kModulus).is_identity());
  EXPECT_TRUE(in_prime_subgroup(g2_generator()));
}

TEST(CurveTest, GroupLaw) {
  SeededRandom rng(4);
  const G1 g(g1_generator());
  const Fr a = Fr::random(rng);
  const Fr b = Fr::random(rng);
  EXPECT_EQ(g * a + g * b, g * (a + b));
  EXPECT_EQ((g * a) * b, g * (a * b));
  EXPECT_TRUE((g * a - g * a).is_identity());
  EXPECT_EQ(g.doubled(), g + g);
  EXPECT_EQ(g + g1_generator(), g.doubled());
  const G2 h(g2_generator());
  EXPECT_EQ(h * a + h * b, h * (a + b));
  EXPECT_TRUE((h * a).is_on_curve());
}

TEST(PairingTest, Bilinearity) {
  SeededRandom rng(5);
  const G1Affine p = g1_generator();
  const G2Affine q = g2_generator();
  const Fq12 base = pairing(p, q);
  EXPECT_FALSE(base.is_one());
  const Fr a = Fr::random(rng);
  const Fr b = Fr::random(rng);
  const Fq12 lhs = pairing((G1(p) * a).to_affine(), (G2(q) * b).to_affine());
  const Fq12 rhs = pairing((G1(p) * (a * b)).to_affine(), q);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(pairing(p, (G2(q) * a).to_affine()), pairing((G1(p) * a).to_affine(), q));
  // e(P, Q)^r == 1
  EXPECT_TRUE(base.pow(Fr::kModulus.limb).is_one());
}

TEST(PairingTest, ProductCancels) {
  SeededRandom rng(6);
  const Fr a = Fr::random(rng);
  const G1Affine p = (G1(g1_generator()) * a).to_affine();
  const G2Affine q = g2_generator();
  std::vector<std::pair<G1Affine, G2Prepared>> terms;
  terms.emplace_back(p, prepare_g2(q));
  terms.emplace_back(-(G1(g1_generator()) * a).to_affine(), prepare_g2(q));
  EXPECT_TRUE(multi_pairing(terms).is_one());
}

TEST(SerializeTest, CompressRoundTrip) {
  SeededRandom rng(7);
  for (int i = 0; i < 20; ++i) {
    const Fr k = Fr::random(rng);
    const G1Affine p = (G1(g1_generator()) * k).to_affine();
    const auto bp = compress(p);
    const auto back = decompress_g1(bp);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
    const G2Affine q = (G2(g2_generator()) * k).to_affine();
    const auto bq = compress(q);
    const auto backq = decompress_g2(bq, true);
    ASSERT_TRUE(backq.has_value());
    EXPECT_EQ(*backq, q);
  }
  EXPECT_EQ(*decompress_g1(compress(G1Affine::identity())), G1Affine::identity());
  std::array<std::uint8_t, 32> bad{};
  bad.fill(0xff);
  EXPECT_FALSE(decompress_g1(bad).has_value());
}

TEST(SerializeTest, UncompressedRoundTrip) {
  SeededRandom rng(8);
  for (int i = 0; i < 10; ++i) {
    const Fr k = Fr::random(rng);
    const G1Affine p = (G1(g1_generator()) * k).to_affine();
    EXPECT_EQ(*decode_uncompressed_g1(encode_uncompressed(p)), p);
    const G2Affine q = (G2(g2_generator()) * k).to_affine();
    EXPECT_EQ(*decode_uncompressed_g2(encode_uncompressed(q)), q);
  }
  EXPECT_EQ(*decode_uncompressed_g1(encode_uncompressed(G1Affine::identity())), G1Affine::identity());
  EXPECT_EQ(*decode_uncompressed_g2(encode_uncompressed(G2Affine::identity())), G2Affine::identity());
  auto off_curve = encode_uncompressed(g1_generator());
  off_curve[63] ^= 1;
  EXPECT_FALSE(decode_uncompressed_g1(off_curve).has_value());
}

// Naive O(n^2) transform used as the FFT oracle.
std::vector<Fr> naive_dft(const std::vector<Fr>& a, const Fr& root) {
  std::vector<Fr> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Fr wk = root.pow(U256::from_u64(k));
    Fr acc;
    Fr w = Fr::one();
    for (const auto& x : a) {
      acc += x * w;
      w *= wk;
    }
    out[k] = acc;
  }
  return out;
}

TEST(DomainTest, SizeSelection) {
  EXPECT_EQ(EvaluationDomain(1).size(), 1U);
  EXPECT_EQ(EvaluationDomain(5).size(), 6U);
  EXPECT_EQ(EvaluationDomain(100).size(), 104U);
  EXPECT_EQ(EvaluationDomain(26370).size(), 26624U);
  EXPECT_EQ(EvaluationDomain(79108).size(), 79872U);
  EXPECT_EQ(EvaluationDomain(1U << 20).size(), 1U << 20);
}

TEST(DomainTest, MatchesNaiveTransform) {
  SeededRandom rng(9);
  for (std::size_t min : {2U, 8U, 9U, 13U, 24U, 78U, 117U, 234U}) {
    const EvaluationDomain d(min);
    ASSERT_EQ(d.size(), min);
    EXPECT_TRUE(d.generator().pow(U256::from_u64(d.size())).is_one());
    std::vector<Fr> a(d.size());
    for (auto& x : a) x = Fr::random(rng);
    auto b = a;
    d.fft(b);
    EXPECT_EQ(b, naive_dft(a, d.generator())) << min;
    d.ifft(b);
    EXPECT_EQ(b, a);
    d.coset_fft(b);
    d.icoset_fft(b);
    EXPECT_EQ(b, a);
  }
}

TEST(DomainTest, LagrangeAndVanishing) {
  SeededRandom rng(10);
  const EvaluationDomain d(39);
  const Fr t = Fr::random(rng);
  const auto l = d.lagrange_coefficients(t);
  // Interpolating the values of a random polynomial reproduces it at t.
  std::vector<Fr> coeffs(d.size());
  for (auto& c : coeffs) c = Fr::random(rng);
  auto evals = coeffs;
  d.fft(evals);
  Fr direct;
  for (std::size_t i = coeffs.size(); i-- > 0;) direct = direct * t + coeffs[i];
  Fr via_lagrange;
  for (std::size_t i = 0; i < evals.size(); ++i) via_lagrange += l[i] * evals[i];
  EXPECT_EQ(via_lagrange, direct);
  EXPECT_TRUE(d.vanishing_at(d.generator()).is_zero());
  EXPECT_FALSE(d.vanishing_at(EvaluationDomain::coset_shift()).is_zero());
}

TEST(MsmTest, MatchesNaiveSum) {
  SeededRandom rng(11);
  for (std::size_t n : {1U, 5U, 40U, 300U}) {
    std::vector<Fr> scalars(n);
    for (std::size_t i = 0; i < n; ++i) {
      scalars[i] = i % 4 == 0 ? Fr::zero() : i % 4 == 1 ? Fr::one() : Fr::random(rng);
    }
    std::vector<Fr> base_scalars(n);
    for (auto& b : base_scalars) b = Fr::random(rng);
    const auto g1 = fixed_base_batch_mul<G1Curve>(g1_generator(), base_scalars);
    const auto g2 = fixed_base_batch_mul<G2Curve>(g2_generator(), base_scalars);
    Fr expected;
    for (std::size_t i = 0; i < n; ++i) {
      expected += scalars[i] * base_scalars[i];
      ASSERT_EQ(g1[i], (G1(g1_generator()) * base_scalars[i]).to_affine());
    }
    EXPECT_EQ(msm<G1Curve>(g1, scalars), G1(g1_generator()) * expected);
    EXPECT_EQ(msm<G2Curve>(g2, scalars), G2(g2_generator()) * expected);
  }
  // Largest scalar exercises the top signed digit.
  const std::vector<Fr> top = {-Fr::one(), -Fr::from_u64(2)};
  const std::vector<G1Affine> bases = {g1_generator(), g1_generator()};
  EXPECT_EQ(msm<G1Curve>(bases, top), G1(g1_generator()) * -Fr::from_u64(3));
}

}  // namespace
}  // namespace zklaims::algebra
