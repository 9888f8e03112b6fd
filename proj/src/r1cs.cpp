#include "zklaims/r1cs.hpp"

#include <algorithm>

#include <sodium.h>

namespace zklaims::r1cs {

std::optional<std::size_t> ConstraintSystem::first_unsatisfied(std::span<const Fr> z) const {
  return first_unsatisfied(z, 0, constraints.size());
}

std::optional<std::size_t> ConstraintSystem::first_unsatisfied(std::span<const Fr> z,
                                                               std::size_t begin,
                                                               std::size_t end) const {
  for (std::size_t i = begin; i < std::min(end, constraints.size()); ++i) {
    const auto& c = constraints[i];
    if (c.a.evaluate(z) * c.b.evaluate(z) != c.c.evaluate(z)) return i;
  }
  return std::nullopt;
}

namespace {

void absorb_u64(crypto_hash_sha256_state& st, std::uint64_t v) {
  std::uint8_t buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
  crypto_hash_sha256_update(&st, buf, sizeof buf);
}

void absorb(crypto_hash_sha256_state& st, const LinearCombination& lc) {
  absorb_u64(st, lc.terms().size());
  for (const auto& t : lc.terms()) {
    absorb_u64(st, t.index);
    // Montgomery form is unique per element, so it is as canonical as the plain value.
    for (auto limb : t.coeff.mont().limb) absorb_u64(st, limb);
  }
}

}  // namespace

std::array<std::uint8_t, 32> ConstraintSystem::fingerprint() const {
  crypto_hash_sha256_state st;
  crypto_hash_sha256_init(&st);
  absorb_u64(st, num_inputs);
  absorb_u64(st, num_variables);
  absorb_u64(st, constraints.size());
  for (const auto& c : constraints) {
    absorb(st, c.a);
    absorb(st, c.b);
    absorb(st, c.c);
  }
  std::array<std::uint8_t, 32> out{};
  crypto_hash_sha256_final(&st, out.data());
  return out;
}

}  // namespace zklaims::r1cs
