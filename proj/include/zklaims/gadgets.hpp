#pragma once

// Constraint-building primitives: a builder that records R1CS constraints
// and the matching assignment in one pass, boolean wires with constant
// folding, a SHA-256 compression gadget and a three-way comparison gadget.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "zklaims/r1cs.hpp"

namespace zklaims::gadgets {

using algebra::Fr;
using r1cs::LinearCombination;
using r1cs::Variable;

/// 2^k for k < 256.
const Fr& power_of_two(std::size_t k);

/// A boolean wire: either a compile-time constant or a (possibly negated)
/// boolean variable.
struct Bit {
  bool is_constant = true;
  bool flag = false;  // constant value, or "negated" for variables
  std::uint32_t index = 0;

  static Bit constant(bool v) { return Bit{true, v, 0}; }
};

/// Big-endian: element 0 is the most significant bit.
using Word = std::array<Bit, 32>;

class Builder {
 public:
  /// With `record_constraints` false only the assignment is produced.
  explicit Builder(bool record_constraints);

  /// All public inputs must be allocated before the first auxiliary variable.
  Variable alloc_input(const Fr& value);
  Variable alloc(const Fr& value);
  void enforce(const LinearCombination& a, const LinearCombination& b,
               const LinearCombination& c);

  const Fr& value(Variable v) const { return values_[v.index]; }
  Fr value(const LinearCombination& lc) const { return lc.evaluate(values_); }

  Bit alloc_bit(bool v);
  LinearCombination lc(const Bit& b) const;
  bool value(const Bit& b) const;

  Bit xor_bits(const Bit& a, const Bit& b);
  /// sel ? if_true : if_false
  Bit choose(const Bit& sel, const Bit& if_true, const Bit& if_false);
  Bit majority(const Bit& a, const Bit& b, const Bit& c);

  /// (sum of words + constant) mod 2^32.
  Word add_words(std::span<const Word> words, std::uint32_t constant);

  /// Allocates `count` boolean variables holding the low bits of `v`
  /// (little-endian) and enforces that they recompose to `v`.
  std::vector<Variable> decompose(const LinearCombination& v, std::size_t count);

  std::size_t num_constraints() const { return num_constraints_; }
  std::size_t num_inputs() const { return num_inputs_; }

  r1cs::ConstraintSystem finish_system();
  std::vector<Fr> finish_assignment() { return std::move(values_); }

 private:
  bool record_;
  std::size_t num_inputs_ = 0;
  std::size_t num_constraints_ = 0;
  std::vector<Fr> values_;
  std::vector<r1cs::Constraint> constraints_;
};

Word constant_word(std::uint32_t v);

/// SHA-256 compression of one 512-bit block from the standard IV; returns
/// the 256 digest bits, most significant first.
std::array<Bit, 256> sha256_compress(Builder& b, const std::array<Bit, 512>& block);

/// Wires of a three-way comparison value ? reference.
struct ComparisonWires {
  Variable ge;  // value >= reference; lt = 1 - ge
  Variable eq;
  Variable gt;
};

/// Enforces the one-hot comparison of `value` (already known to fit
/// `width` bits) against the public `reference` (range-checked here), and
/// that the public 3-bit `mask` selects a true outcome:
///   mask.lt * lt + mask.eq * eq + mask.gt * gt = 1.
ComparisonWires enforce_masked_comparison(Builder& b, const LinearCombination& value,
                                          Variable reference, Variable mask, std::size_t width);

}  // namespace zklaims::gadgets
