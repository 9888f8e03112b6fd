#include "zklaims/circuit.hpp"

#include <map>
#include <mutex>

#include "zklaims/gadgets.hpp"

namespace zklaims::circuit {

namespace {

using encoding::kAttributeBits;
using encoding::kPayloadBits;
using encoding::kSlotsPerPayload;
using gadgets::Bit;
using gadgets::Builder;
using r1cs::LinearCombination;
using r1cs::Variable;

constexpr std::uint8_t kMagic[4] = {'Z', 'K', 'C', 'S'};

std::array<Bit, 256> hash_gadget(Builder& b, HashAlgorithm hash,
                                 const std::array<Bit, kPayloadBits>& message) {
  switch (hash) {
    case HashAlgorithm::sha256: {
      // One block: message, a single 1 bit, zeros, 64-bit length 256.
      std::array<Bit, 512> block;
      block.fill(Bit::constant(false));
      std::copy(message.begin(), message.end(), block.begin());
      block[256] = Bit::constant(true);
      block[512 - 64 + 55] = Bit::constant(true);
      return gadgets::sha256_compress(b, block);
    }
  }
  throw UnsupportedHash("no circuit for hash id " + std::to_string(static_cast<int>(hash)));
}

LinearCombination pack_bits(const Builder& b, std::span<const Bit> bits) {
  LinearCombination lc;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    lc += b.lc(bits[i]) * gadgets::power_of_two(bits.size() - 1 - i);
  }
  return lc;
}

// Generates the whole circuit. With empty `payloads` every private bit is 0
// and `inputs` may be empty, which is all constraint recording needs.
std::vector<SlotWires> generate(Builder& b, std::size_t m, HashAlgorithm hash,
                                std::span<const encoding::PayloadPreimage> payloads,
                                std::span<const Fr> inputs) {
  const std::size_t slots = kSlotsPerPayload * m;
  std::vector<Variable> x;
  x.reserve(encoding::kFieldElementsPerPayload * m);
  for (std::size_t i = 0; i < encoding::kFieldElementsPerPayload * m; ++i) {
    x.push_back(b.alloc_input(inputs.empty() ? Fr::zero() : inputs[i]));
  }
  const auto digest_hi = [&](std::size_t j) { return x[2 * j]; };
  const auto digest_lo = [&](std::size_t j) { return x[2 * j + 1]; };
  const auto mask = [&](std::size_t i) { return x[2 * m + i]; };
  const auto reference = [&](std::size_t i) { return x[2 * m + slots + i]; };

  std::vector<SlotWires> wires;
  wires.reserve(slots);
  const LinearCombination one = LinearCombination::constant(1);
  for (std::size_t j = 0; j < m; ++j) {
    std::array<Bit, kPayloadBits> bits;
    for (std::size_t i = 0; i < kPayloadBits; ++i) {
      bits[i] = b.alloc_bit(!payloads.empty() && payloads[j].bit(i));
    }
    for (std::size_t i = kSlotsPerPayload * kAttributeBits; i < kPayloadBits; ++i) {
      b.enforce(b.lc(bits[i]), one, LinearCombination());
    }

    const auto digest = hash_gadget(b, hash, bits);
    const std::span<const Bit> d(digest);
    b.enforce(pack_bits(b, d.first(128)), one, digest_hi(j));
    b.enforce(pack_bits(b, d.last(128)), one, digest_lo(j));

    for (std::size_t s = 0; s < kSlotsPerPayload; ++s) {
      const std::size_t slot = kSlotsPerPayload * j + s;
      const auto value =
          pack_bits(b, std::span<const Bit>(bits).subspan(s * kAttributeBits, kAttributeBits));
      const std::size_t first = b.num_constraints();
      const auto w = gadgets::enforce_masked_comparison(b, value, reference(slot), mask(slot),
                                                        kAttributeBits);
      wires.push_back({w.ge.index, w.eq.index, w.gt.index, first, b.num_constraints()});
    }
  }
  return wires;
}

}  // namespace

Bytes DescriptorHeader::serialize() const {
  ByteWriter w;
  w.bytes(kMagic);
  w.u8(kVersion);
  w.u8(static_cast<std::uint8_t>(hash));
  w.u16(static_cast<std::uint16_t>(payload_count));
  w.u32(static_cast<std::uint32_t>(constraint_count));
  w.u32(static_cast<std::uint32_t>(num_variables));
  w.u32(static_cast<std::uint32_t>(num_inputs));
  w.bytes(fingerprint);
  return w.take();
}

DescriptorHeader DescriptorHeader::parse(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  const auto magic = in.fixed<4>();
  if (!std::equal(magic.begin(), magic.end(), kMagic)) {
    throw MalformedInput("not a constraint system descriptor");
  }
  if (const auto v = in.u8(); v != kVersion) {
    throw MalformedInput("unsupported descriptor version " + std::to_string(v));
  }
  DescriptorHeader h;
  h.hash = hash_algorithm_from_id(in.u8());
  h.payload_count = in.u16();
  h.constraint_count = in.u32();
  h.num_variables = in.u32();
  h.num_inputs = in.u32();
  const auto fp = in.fixed<32>();
  std::copy(fp.begin(), fp.end(), h.fingerprint.begin());
  in.expect_end();
  return h;
}

ConstraintSystemDescriptor build_constraint_system(std::size_t payload_count, HashAlgorithm hash) {
  if (payload_count < 1 || payload_count > kMaxPayloads) {
    throw RangeError("payload count must be in [1, 64], got " + std::to_string(payload_count));
  }
  if (hash != HashAlgorithm::sha256) {
    throw UnsupportedHash("no circuit for hash id " + std::to_string(static_cast<int>(hash)));
  }
  static std::mutex mu;
  static std::map<std::pair<std::size_t, HashAlgorithm>, ConstraintSystemDescriptor> cache;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(payload_count, hash);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  Builder b(true);
  auto wires = generate(b, payload_count, hash, {}, {});
  auto cs = std::make_shared<r1cs::ConstraintSystem>(b.finish_system());
  ConstraintSystemDescriptor d;
  d.header_.hash = hash;
  d.header_.payload_count = payload_count;
  d.header_.constraint_count = cs->constraints.size();
  d.header_.num_variables = cs->num_variables;
  d.header_.num_inputs = cs->num_inputs;
  d.header_.fingerprint = cs->fingerprint();
  d.system_ = std::move(cs);
  d.wires_ = std::make_shared<const std::vector<SlotWires>>(std::move(wires));
  return cache.emplace(key, std::move(d)).first->second;
}

ConstraintSystemDescriptor build_constraint_system(std::size_t payload_count, std::uint8_t hash_id) {
  return build_constraint_system(payload_count, hash_algorithm_from_id(hash_id));
}

ConstraintSystemDescriptor load_descriptor(std::span<const std::uint8_t> bytes) {
  const auto header = DescriptorHeader::parse(bytes);
  auto d = build_constraint_system(header.payload_count, header.hash);
  if (d.header() != header) {
    throw KeyMismatch("descriptor does not match the regenerated constraint system");
  }
  return d;
}

std::vector<Fr> WitnessAssignment::assignment(std::span<const Fr> x) const {
  if (x.size() != num_inputs) {
    throw ShapeError("public input has " + std::to_string(x.size()) + " elements, expected " +
                     std::to_string(num_inputs));
  }
  std::vector<Fr> z;
  z.reserve(1 + x.size() + aux.size());
  z.push_back(Fr::one());
  z.insert(z.end(), x.begin(), x.end());
  z.insert(z.end(), aux.begin(), aux.end());
  return z;
}

WitnessAssignment assign_witness(const ConstraintSystemDescriptor& descriptor,
                                 std::span<const encoding::PayloadPreimage> payloads,
                                 const encoding::PublicInput& x) {
  const std::size_t m = descriptor.payload_count();
  if (payloads.size() != m || x.payload_count() != m) {
    throw ShapeError("descriptor has " + std::to_string(m) + " payloads, got " +
                     std::to_string(payloads.size()) + " preimages and " +
                     std::to_string(x.payload_count()) + " digests");
  }
  const auto inputs = x.field_elements();
  Builder b(false);
  generate(b, m, descriptor.hash(), payloads, inputs);
  auto z = b.finish_assignment();
  WitnessAssignment w;
  w.payload_count = m;
  w.num_inputs = inputs.size();
  w.aux.assign(z.begin() + static_cast<std::ptrdiff_t>(1 + inputs.size()), z.end());
  return w;
}

encoding::PublicInput public_input_for(const Credential& credential, const Statement& statement) {
  if (statement.slot_count() != credential.attributes.size()) {
    throw ShapeError("statement covers " + std::to_string(statement.slot_count()) +
                     " slots, credential has " + std::to_string(credential.attributes.size()));
  }
  return encoding::assemble_public_input(credential.y, statement.masks(), statement.references());
}

WitnessAssignment synthesize_witness(const ConstraintSystemDescriptor& descriptor,
                                     const Credential& credential, const Statement& statement) {
  const std::size_t m = descriptor.payload_count();
  if (credential.y.size() != m || credential.attributes.size() != kSlotsPerPayload * m) {
    throw ShapeError("credential shape does not match a " + std::to_string(m) +
                     "-payload constraint system");
  }
  const auto x = public_input_for(credential, statement);
  for (std::size_t i = 0; i < statement.slot_count(); ++i) {
    const auto& c = statement.clause(i);
    if (!encoding::evaluate_predicate(c.mask, credential.attributes[i], c.reference)) {
      throw UnsatisfiableStatement(i);
    }
  }
  std::vector<encoding::PayloadPreimage> payloads;
  payloads.reserve(m);
  for (std::size_t j = 0; j < m; ++j) payloads.push_back(credential.payload(j));
  return assign_witness(descriptor, payloads, x);
}

}  // namespace zklaims::circuit
