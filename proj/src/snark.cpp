#include "zklaims/snark.hpp"

#include <algorithm>

#include "zklaims/algebra/fft.hpp"
#include "zklaims/algebra/msm.hpp"
#include "zklaims/algebra/pairing.hpp"
#include "zklaims/algebra/serialize.hpp"

namespace zklaims::snark {

using algebra::EvaluationDomain;
using algebra::Fr;
using algebra::G1;
using algebra::G1Curve;
using algebra::G2;
using algebra::G2Curve;

namespace {

constexpr std::uint8_t kPkMagic[4] = {'Z', 'K', 'P', 'K'};
constexpr std::uint8_t kVkMagic[4] = {'Z', 'K', 'V', 'K'};

// The QAP domain holds one row per constraint plus one per input
// (including the constant) for the input-consistency terms.
EvaluationDomain domain_for(const r1cs::ConstraintSystem& cs) {
  return EvaluationDomain(cs.constraints.size() + cs.num_inputs + 1);
}

Fr nonzero_random(RandomSource& rng) {
  for (;;) {
    const Fr v = Fr::random(rng);
    if (!v.is_zero()) return v;
  }
}

void write_header(ByteWriter& w, const std::uint8_t (&magic)[4], const KeyHeader& h) {
  w.bytes(magic);
  w.u8(KeyHeader::kVersion);
  w.u8(static_cast<std::uint8_t>(h.hash));
  w.u16(static_cast<std::uint16_t>(h.payload_count));
  w.u8(h.seeded ? KeyHeader::kSeededFlag : 0);
  w.bytes(h.fingerprint);
}

KeyHeader read_header(ByteReader& in, const std::uint8_t (&magic)[4], const char* what) {
  const auto m = in.fixed<4>();
  if (!std::equal(m.begin(), m.end(), magic)) throw MalformedInput(std::string("not a ") + what);
  if (const auto v = in.u8(); v != KeyHeader::kVersion) {
    throw MalformedInput(std::string("unsupported ") + what + " version " + std::to_string(v));
  }
  KeyHeader h;
  h.hash = hash_algorithm_from_id(in.u8());
  h.payload_count = in.u16();
  const std::uint8_t flags = in.u8();
  if ((flags & ~KeyHeader::kSeededFlag) != 0) throw MalformedInput("unknown key flags");
  h.seeded = (flags & KeyHeader::kSeededFlag) != 0;
  const auto fp = in.fixed<32>();
  std::copy(fp.begin(), fp.end(), h.fingerprint.begin());
  return h;
}

void put(ByteWriter& w, const G1Affine& p) { w.bytes(algebra::encode_uncompressed(p)); }
void put(ByteWriter& w, const G2Affine& p) { w.bytes(algebra::encode_uncompressed(p)); }

G1Affine get_g1(ByteReader& in) {
  const auto p = algebra::decode_uncompressed_g1(in.fixed<algebra::kG1UncompressedSize>());
  if (!p) throw MalformedInput("invalid G1 point in proving key");
  return *p;
}

G2Affine get_g2(ByteReader& in) {
  const auto p = algebra::decode_uncompressed_g2(in.fixed<algebra::kG2UncompressedSize>());
  if (!p) throw MalformedInput("invalid G2 point in proving key");
  return *p;
}

template <class Point>
void put_vector(ByteWriter& w, const std::vector<Point>& v) {
  w.u32(static_cast<std::uint32_t>(v.size()));
  for (const auto& p : v) put(w, p);
}

template <class Get>
auto get_vector(ByteReader& in, std::size_t point_size, Get get) {
  const std::size_t n = in.u32();
  if (n > in.remaining() / point_size) throw MalformedInput("truncated point vector");
  std::vector<decltype(get(in))> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(get(in));
  return out;
}

G1Affine get_compressed_g1(ByteReader& in) {
  const auto p = algebra::decompress_g1(in.fixed<algebra::kG1CompressedSize>());
  if (!p) throw MalformedInput("invalid compressed G1 point");
  return *p;
}

G2Affine get_compressed_g2(ByteReader& in) {
  const auto p = algebra::decompress_g2(in.fixed<algebra::kG2CompressedSize>(), true);
  if (!p) throw MalformedInput("invalid compressed G2 point");
  return *p;
}

}  // namespace

Bytes ProvingKey::serialize() const {
  ByteWriter w;
  write_header(w, kPkMagic, header);
  put(w, alpha_g1);
  put(w, beta_g1);
  put(w, delta_g1);
  put(w, beta_g2);
  put(w, delta_g2);
  put_vector(w, a_query);
  put_vector(w, b_g1_query);
  put_vector(w, b_g2_query);
  put_vector(w, h_query);
  put_vector(w, l_query);
  return w.take();
}

ProvingKey ProvingKey::parse(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  ProvingKey pk;
  pk.header = read_header(in, kPkMagic, "proving key");
  pk.alpha_g1 = get_g1(in);
  pk.beta_g1 = get_g1(in);
  pk.delta_g1 = get_g1(in);
  pk.beta_g2 = get_g2(in);
  pk.delta_g2 = get_g2(in);
  pk.a_query = get_vector(in, algebra::kG1UncompressedSize, get_g1);
  pk.b_g1_query = get_vector(in, algebra::kG1UncompressedSize, get_g1);
  pk.b_g2_query = get_vector(in, algebra::kG2UncompressedSize, get_g2);
  pk.h_query = get_vector(in, algebra::kG1UncompressedSize, get_g1);
  pk.l_query = get_vector(in, algebra::kG1UncompressedSize, get_g1);
  in.expect_end();
  const std::size_t n = pk.a_query.size();
  if (n == 0 || pk.b_g1_query.size() != n || pk.b_g2_query.size() != n || pk.l_query.size() >= n) {
    throw MalformedInput("proving key query lengths are inconsistent");
  }
  return pk;
}

Bytes VerificationKey::serialize() const {
  ByteWriter w;
  write_header(w, kVkMagic, header);
  w.bytes(algebra::compress(alpha_g1));
  w.bytes(algebra::compress(beta_g2));
  w.bytes(algebra::compress(gamma_g2));
  w.bytes(algebra::compress(delta_g2));
  w.u32(static_cast<std::uint32_t>(ic.size()));
  for (const auto& p : ic) w.bytes(algebra::compress(p));
  return w.take();
}

VerificationKey VerificationKey::parse(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  VerificationKey vk;
  vk.header = read_header(in, kVkMagic, "verification key");
  vk.alpha_g1 = get_compressed_g1(in);
  vk.beta_g2 = get_compressed_g2(in);
  vk.gamma_g2 = get_compressed_g2(in);
  vk.delta_g2 = get_compressed_g2(in);
  vk.ic = get_vector(in, algebra::kG1CompressedSize, get_compressed_g1);
  in.expect_end();
  if (vk.ic.empty()) throw MalformedInput("verification key has no input commitments");
  return vk;
}

std::array<std::uint8_t, Proof::kSize> Proof::serialize() const {
  std::array<std::uint8_t, kSize> out{};
  const auto pa = algebra::compress(a);
  const auto pb = algebra::compress(b);
  const auto pc = algebra::compress(c);
  std::copy(pa.begin(), pa.end(), out.begin());
  std::copy(pb.begin(), pb.end(), out.begin() + 32);
  std::copy(pc.begin(), pc.end(), out.begin() + 96);
  return out;
}

Proof Proof::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kSize) {
    throw MalformedInput("proof must be " + std::to_string(kSize) + " bytes, got " +
                         std::to_string(bytes.size()));
  }
  ByteReader in(bytes);
  Proof p;
  p.a = get_compressed_g1(in);
  p.b = get_compressed_g2(in);
  p.c = get_compressed_g1(in);
  return p;
}

KeyPair setup(const circuit::ConstraintSystemDescriptor& descriptor, const std::optional<Seed>& seed) {
  SystemRandom system_rng;
  std::optional<SeededRandom> seeded_rng;
  if (seed) seeded_rng.emplace(*seed);
  RandomSource& rng = seeded_rng ? static_cast<RandomSource&>(*seeded_rng) : system_rng;

  const auto& cs = descriptor.system();
  const EvaluationDomain domain = domain_for(cs);
  const std::size_t num_vars = cs.num_variables + 1;
  const std::size_t num_public = cs.num_inputs + 1;

  Fr tau;
  do {
    tau = nonzero_random(rng);
  } while (domain.vanishing_at(tau).is_zero());
  const Fr alpha = nonzero_random(rng);
  const Fr beta = nonzero_random(rng);
  const Fr gamma = nonzero_random(rng);
  const Fr delta = nonzero_random(rng);

  // A_j(tau), B_j(tau), C_j(tau) for every variable.
  std::vector<Fr> at(num_vars), bt(num_vars), ct(num_vars);
  {
    const std::vector<Fr> u = domain.lagrange_coefficients(tau);
    for (std::size_t i = 0; i < cs.constraints.size(); ++i) {
      const auto& c = cs.constraints[i];
      for (const auto& t : c.a.terms()) at[t.index] += u[i] * t.coeff;
      for (const auto& t : c.b.terms()) bt[t.index] += u[i] * t.coeff;
      for (const auto& t : c.c.terms()) ct[t.index] += u[i] * t.coeff;
    }
    for (std::size_t j = 0; j < num_public; ++j) at[j] += u[cs.constraints.size() + j];
  }

  const Fr gamma_inv = gamma.inverse();
  const Fr delta_inv = delta.inverse();
  std::vector<Fr> ic_scalars(num_public);
  std::vector<Fr> l_scalars(num_vars - num_public);
  for (std::size_t j = 0; j < num_vars; ++j) {
    const Fr k = beta * at[j] + alpha * bt[j] + ct[j];
    if (j < num_public) {
      ic_scalars[j] = k * gamma_inv;
    } else {
      l_scalars[j - num_public] = k * delta_inv;
    }
  }
  ct.clear();
  ct.shrink_to_fit();

  std::vector<Fr> h_scalars(domain.size() - 1);
  {
    Fr power = domain.vanishing_at(tau) * delta_inv;
    for (auto& h : h_scalars) {
      h = power;
      power *= tau;
    }
  }

  // One shared table for every G1 query.
  std::vector<Fr> g1_scalars;
  g1_scalars.reserve(2 * num_vars + h_scalars.size() + l_scalars.size() + num_public + 4);
  const auto append = [&](const std::vector<Fr>& v) {
    const std::size_t offset = g1_scalars.size();
    g1_scalars.insert(g1_scalars.end(), v.begin(), v.end());
    return offset;
  };
  const std::size_t off_a = append(at);
  const std::size_t off_b = append(bt);
  const std::size_t off_h = append(h_scalars);
  const std::size_t off_l = append(l_scalars);
  const std::size_t off_ic = append(ic_scalars);
  const std::size_t off_single = append({alpha, beta, delta});
  h_scalars = {};
  l_scalars = {};
  ic_scalars = {};

  const auto g1 = algebra::fixed_base_batch_mul<G1Curve>(algebra::g1_generator(), g1_scalars);
  g1_scalars = {};
  const auto slice = [&](std::size_t offset, std::size_t n) {
    return std::vector<G1Affine>(g1.begin() + static_cast<std::ptrdiff_t>(offset),
                                 g1.begin() + static_cast<std::ptrdiff_t>(offset + n));
  };

  bt.push_back(beta);
  bt.push_back(gamma);
  bt.push_back(delta);
  auto g2 = algebra::fixed_base_batch_mul<G2Curve>(algebra::g2_generator(), bt);

  KeyHeader header;
  header.hash = descriptor.hash();
  header.payload_count = descriptor.payload_count();
  header.seeded = seed.has_value();
  header.fingerprint = descriptor.fingerprint();

  KeyPair keys;
  auto& pk = keys.pk;
  pk.header = header;
  pk.alpha_g1 = g1[off_single];
  pk.beta_g1 = g1[off_single + 1];
  pk.delta_g1 = g1[off_single + 2];
  pk.beta_g2 = g2[num_vars];
  pk.delta_g2 = g2[num_vars + 2];
  pk.a_query = slice(off_a, num_vars);
  pk.b_g1_query = slice(off_b, num_vars);
  pk.h_query = slice(off_h, domain.size() - 1);
  pk.l_query = slice(off_l, num_vars - num_public);

  auto& vk = keys.vk;
  vk.header = header;
  vk.alpha_g1 = pk.alpha_g1;
  vk.beta_g2 = pk.beta_g2;
  vk.gamma_g2 = g2[num_vars + 1];
  vk.delta_g2 = pk.delta_g2;
  vk.ic = slice(off_ic, num_public);

  g2.resize(num_vars);
  pk.b_g2_query = std::move(g2);
  return keys;
}

namespace {

// Coefficients of H = (A B - C) / Z, computed on the coset g*H.
std::vector<Fr> quotient_coefficients(const r1cs::ConstraintSystem& cs, const EvaluationDomain& domain,
                                      std::span<const Fr> z) {
  const std::size_t n = domain.size();
  std::vector<Fr> a(n), b(n), c(n);
  for (std::size_t i = 0; i < cs.constraints.size(); ++i) {
    const auto& k = cs.constraints[i];
    a[i] = k.a.evaluate(z);
    b[i] = k.b.evaluate(z);
    c[i] = k.c.evaluate(z);
  }
  for (std::size_t j = 0; j <= cs.num_inputs; ++j) a[cs.constraints.size() + j] = z[j];

  domain.ifft(a);
  domain.ifft(b);
  domain.ifft(c);
  domain.coset_fft(a);
  domain.coset_fft(b);
  domain.coset_fft(c);
  // Z is constant on the coset: g^n - 1.
  const Fr z_inv = domain.vanishing_at(EvaluationDomain::coset_shift()).inverse();
  for (std::size_t i = 0; i < n; ++i) a[i] = (a[i] * b[i] - c[i]) * z_inv;
  domain.icoset_fft(a);
  a.pop_back();  // degree n - 2
  return a;
}

}  // namespace

Proof prove(const ProvingKey& pk, const circuit::WitnessAssignment& witness,
            const encoding::PublicInput& x, RandomSource& rng) {
  if (pk.public_input_arity() != x.arity()) {
    throw KeyMismatch("proving key expects " + std::to_string(pk.public_input_arity()) +
                      " public inputs, got " + std::to_string(x.arity()));
  }
  if (witness.payload_count != pk.header.payload_count) {
    throw KeyMismatch("witness is for " + std::to_string(witness.payload_count) +
                      " payloads, proving key for " + std::to_string(pk.header.payload_count));
  }
  const auto descriptor = circuit::build_constraint_system(pk.header.payload_count, pk.header.hash);
  if (descriptor.fingerprint() != pk.header.fingerprint ||
      pk.a_query.size() != descriptor.system().num_variables + 1) {
    throw KeyMismatch("proving key was not generated for this constraint system");
  }
  const auto& cs = descriptor.system();
  const std::vector<Fr> z = witness.assignment(x.field_elements());
  if (z.size() != cs.num_variables + 1) throw KeyMismatch("witness size does not match the proving key");
  if (const auto bad = cs.first_unsatisfied(z)) throw UnsatisfiedConstraints(*bad);

  const EvaluationDomain domain = domain_for(cs);
  if (pk.h_query.size() != domain.size() - 1) throw KeyMismatch("proving key has the wrong H query size");
  const std::vector<Fr> h = quotient_coefficients(cs, domain, z);

  const Fr r = Fr::random(rng);
  const Fr s = Fr::random(rng);
  const std::span<const Fr> z_aux = std::span(z).subspan(cs.num_inputs + 1);

  const G1 a = G1(pk.alpha_g1) + algebra::msm<G1Curve>(pk.a_query, z) + G1(pk.delta_g1) * r;
  const G1 b1 = G1(pk.beta_g1) + algebra::msm<G1Curve>(pk.b_g1_query, z) + G1(pk.delta_g1) * s;
  const G2 b2 = G2(pk.beta_g2) + algebra::msm<G2Curve>(pk.b_g2_query, z) + G2(pk.delta_g2) * s;
  const G1 c = algebra::msm<G1Curve>(pk.l_query, z_aux) + algebra::msm<G1Curve>(pk.h_query, h) +
               a * s + b1 * r - G1(pk.delta_g1) * (r * s);

  Proof proof;
  proof.a = a.to_affine();
  proof.b = b2.to_affine();
  proof.c = c.to_affine();
  return proof;
}

Proof prove(const ProvingKey& pk, const circuit::WitnessAssignment& witness,
            const encoding::PublicInput& x) {
  SystemRandom rng;
  return prove(pk, witness, x, rng);
}

bool verify(const VerificationKey& vk, const Proof& proof, const encoding::PublicInput& x) {
  if (vk.public_input_arity() != x.arity()) {
    throw ShapeError("verification key expects " + std::to_string(vk.public_input_arity()) +
                     " public inputs, got " + std::to_string(x.arity()));
  }
  const auto inputs = x.field_elements();
  const G1 acc = G1(vk.ic[0]) + algebra::msm<G1Curve>(std::span(vk.ic).subspan(1), inputs);

  const std::array terms = {
      std::pair{proof.a, algebra::prepare_g2(proof.b)},
      std::pair{-vk.alpha_g1, algebra::prepare_g2(vk.beta_g2)},
      std::pair{(-acc).to_affine(), algebra::prepare_g2(vk.gamma_g2)},
      std::pair{-proof.c, algebra::prepare_g2(vk.delta_g2)},
  };
  return algebra::multi_pairing(terms).is_one();
}

}  // namespace zklaims::snark
