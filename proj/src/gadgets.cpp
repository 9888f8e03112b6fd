#include "zklaims/gadgets.hpp"

#include <stdexcept>

namespace zklaims::gadgets {

namespace {

constexpr std::array<std::uint32_t, 64> kRoundConstants = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
    0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
    0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
    0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
    0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

constexpr std::array<std::uint32_t, 8> kInitialState = {0x6a09e667, 0xbb67ae85, 0x3c6ef372,
                                                        0xa54ff53a, 0x510e527f, 0x9b05688c,
                                                        0x1f83d9ab, 0x5be0cd19};

Bit negate(Bit b) {
  b.flag = !b.flag;
  return b;
}

bool same(const Bit& a, const Bit& b) {
  return a.is_constant == b.is_constant && a.flag == b.flag && a.index == b.index;
}

Word rotr(const Word& x, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < 32; ++i) out[i] = x[(i + 32 - n) % 32];
  return out;
}

Word shr(const Word& x, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < 32; ++i) out[i] = i >= n ? x[i - n] : Bit::constant(false);
  return out;
}

Word xor3(Builder& b, const Word& x, const Word& y, const Word& z) {
  Word out;
  for (std::size_t i = 0; i < 32; ++i) out[i] = b.xor_bits(b.xor_bits(x[i], y[i]), z[i]);
  return out;
}

}  // namespace

const Fr& power_of_two(std::size_t k) {
  static const std::array<Fr, 256> kTable = [] {
    std::array<Fr, 256> t{};
    t[0] = Fr::one();
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1].doubled();
    return t;
  }();
  return kTable.at(k);
}

Word constant_word(std::uint32_t v) {
  Word out;
  for (std::size_t i = 0; i < 32; ++i) out[i] = Bit::constant(((v >> (31 - i)) & 1U) != 0);
  return out;
}

Builder::Builder(bool record_constraints) : record_(record_constraints) {
  values_.push_back(Fr::one());
}

Variable Builder::alloc_input(const Fr& value) {
  if (values_.size() != num_inputs_ + 1) {
    throw std::logic_error("public inputs must be allocated before auxiliary variables");
  }
  values_.push_back(value);
  ++num_inputs_;
  return Variable{static_cast<std::uint32_t>(values_.size() - 1)};
}

Variable Builder::alloc(const Fr& value) {
  values_.push_back(value);
  return Variable{static_cast<std::uint32_t>(values_.size() - 1)};
}

void Builder::enforce(const LinearCombination& a, const LinearCombination& b,
                      const LinearCombination& c) {
  ++num_constraints_;
  if (record_) constraints_.push_back({a, b, c});
}

Bit Builder::alloc_bit(bool v) {
  const Variable x = alloc(v ? Fr::one() : Fr::zero());
  enforce(x, x, x);
  return Bit{false, false, x.index};
}

LinearCombination Builder::lc(const Bit& b) const {
  if (b.is_constant) return LinearCombination::constant(b.flag ? 1 : 0);
  if (!b.flag) return Variable{b.index};
  return LinearCombination::constant(1) - Variable{b.index};
}

bool Builder::value(const Bit& b) const {
  if (b.is_constant) return b.flag;
  return values_[b.index].is_zero() == b.flag;
}

Bit Builder::xor_bits(const Bit& a, const Bit& b) {
  if (a.is_constant) return a.flag ? negate(b) : b;
  if (b.is_constant) return b.flag ? negate(a) : a;
  const bool negated = a.flag != b.flag;
  if (a.index == b.index) return Bit::constant(negated);
  const Variable x{a.index};
  const Variable y{b.index};
  const bool vx = !values_[a.index].is_zero();
  const bool vy = !values_[b.index].is_zero();
  const Variable z = alloc((vx != vy) ? Fr::one() : Fr::zero());
  // 2x * y = x + y - z
  enforce(LinearCombination(x) * Fr::from_u64(2), y,
          LinearCombination(x) + LinearCombination(y) - LinearCombination(z));
  return Bit{false, negated, z.index};
}

Bit Builder::choose(const Bit& sel, const Bit& if_true, const Bit& if_false) {
  if (sel.is_constant) return sel.flag ? if_true : if_false;
  if (sel.flag) return choose(negate(sel), if_false, if_true);
  if (same(if_true, if_false)) return if_true;
  if (if_true.is_constant && if_false.is_constant) return if_true.flag ? sel : negate(sel);
  const bool v = value(sel) ? value(if_true) : value(if_false);
  const Variable z = alloc(v ? Fr::one() : Fr::zero());
  // sel * (t - f) = z - f
  enforce(Variable{sel.index}, lc(if_true) - lc(if_false), LinearCombination(z) - lc(if_false));
  return Bit{false, false, z.index};
}

Bit Builder::majority(const Bit& a, const Bit& b, const Bit& c) {
  // a == b ? a : c
  return choose(xor_bits(a, b), c, a);
}

Word Builder::add_words(std::span<const Word> words, std::uint32_t constant) {
  LinearCombination sum;
  std::uint64_t constant_part = constant;
  std::uint64_t max_sum = constant;
  bool any_variable = false;
  std::uint64_t total = constant;
  for (const auto& w : words) {
    for (std::size_t i = 0; i < 32; ++i) {
      const std::uint64_t weight = std::uint64_t{1} << (31 - i);
      if (value(w[i])) total += weight;
      if (w[i].is_constant) {
        if (w[i].flag) {
          constant_part += weight;
          max_sum += weight;
        }
        continue;
      }
      any_variable = true;
      max_sum += weight;
      if (w[i].flag) {
        constant_part += weight;
        sum.add_term(Variable{w[i].index}, -power_of_two(31 - i));
      } else {
        sum.add_term(Variable{w[i].index}, power_of_two(31 - i));
      }
    }
  }
  if (!any_variable) return constant_word(static_cast<std::uint32_t>(constant_part));
  sum.add_constant(Fr::from_u64(constant_part));

  std::size_t width = 0;
  while (width < 64 && (max_sum >> width) != 0) ++width;

  LinearCombination packed;
  std::vector<Bit> bits(width);
  for (std::size_t j = 0; j < width; ++j) {
    bits[j] = alloc_bit(((total >> j) & 1U) != 0);
    packed.add_term(Variable{bits[j].index}, power_of_two(j));
  }
  enforce(packed, LinearCombination::constant(1), sum);

  Word out;
  for (std::size_t i = 0; i < 32; ++i) {
    const std::size_t j = 31 - i;
    out[i] = j < width ? bits[j] : Bit::constant(false);
  }
  return out;
}

std::vector<Variable> Builder::decompose(const LinearCombination& v, std::size_t count) {
  const algebra::U256 raw = value(v).to_canonical();
  std::vector<Variable> bits(count);
  LinearCombination packed;
  for (std::size_t j = 0; j < count; ++j) {
    bits[j] = Variable{alloc_bit(raw.bit(j)).index};
    packed.add_term(bits[j], power_of_two(j));
  }
  enforce(packed, LinearCombination::constant(1), v);
  return bits;
}

r1cs::ConstraintSystem Builder::finish_system() {
  r1cs::ConstraintSystem cs;
  cs.num_inputs = num_inputs_;
  cs.num_variables = values_.size() - 1;
  cs.constraints = std::move(constraints_);
  return cs;
}

std::array<Bit, 256> sha256_compress(Builder& b, const std::array<Bit, 512>& block) {
  std::array<Word, 64> w;
  for (std::size_t t = 0; t < 16; ++t) {
    for (std::size_t i = 0; i < 32; ++i) w[t][i] = block[32 * t + i];
  }
  for (std::size_t t = 16; t < 64; ++t) {
    const Word s0 = xor3(b, rotr(w[t - 15], 7), rotr(w[t - 15], 18), shr(w[t - 15], 3));
    const Word s1 = xor3(b, rotr(w[t - 2], 17), rotr(w[t - 2], 19), shr(w[t - 2], 10));
    const std::array<Word, 4> terms = {s1, w[t - 7], s0, w[t - 16]};
    w[t] = b.add_words(terms, 0);
  }

  std::array<Word, 8> s;
  for (std::size_t i = 0; i < 8; ++i) s[i] = constant_word(kInitialState[i]);
  for (std::size_t t = 0; t < 64; ++t) {
    auto& [a, bb, c, d, e, f, g, h] = s;
    const Word big_s1 = xor3(b, rotr(e, 6), rotr(e, 11), rotr(e, 25));
    const Word big_s0 = xor3(b, rotr(a, 2), rotr(a, 13), rotr(a, 22));
    Word ch;
    Word maj;
    for (std::size_t i = 0; i < 32; ++i) {
      ch[i] = b.choose(e[i], f[i], g[i]);
      maj[i] = b.majority(a[i], bb[i], c[i]);
    }
    const std::array<Word, 5> e_terms = {d, h, big_s1, ch, w[t]};
    const std::array<Word, 6> a_terms = {h, big_s1, ch, w[t], big_s0, maj};
    const Word new_e = b.add_words(e_terms, kRoundConstants[t]);
    const Word new_a = b.add_words(a_terms, kRoundConstants[t]);
    h = g;
    g = f;
    f = e;
    e = new_e;
    d = c;
    c = bb;
    bb = a;
    a = new_a;
  }

  std::array<Bit, 256> out;
  for (std::size_t i = 0; i < 8; ++i) {
    const std::array<Word, 1> terms = {s[i]};
    const Word word = b.add_words(terms, kInitialState[i]);
    for (std::size_t k = 0; k < 32; ++k) out[32 * i + k] = word[k];
  }
  return out;
}

ComparisonWires enforce_masked_comparison(Builder& b, const LinearCombination& value,
                                          Variable reference, Variable mask, std::size_t width) {
  const LinearCombination one = LinearCombination::constant(1);
  b.decompose(reference, width);
  const std::vector<Variable> mask_bits = b.decompose(mask, 3);

  // value - reference + 2^width lies in [1, 2^(width+1)); its top bit is value >= reference.
  LinearCombination shifted = value - reference;
  shifted.add_constant(power_of_two(width));
  const std::vector<Variable> shifted_bits = b.decompose(shifted, width + 1);
  const Variable ge = shifted_bits[width];

  const LinearCombination diff = value - reference;
  const Fr diff_value = b.value(diff);
  const Variable inv = b.alloc(diff_value.inverse());
  const Variable eq = b.alloc(diff_value.is_zero() ? Fr::one() : Fr::zero());
  b.enforce(diff, inv, one - eq);
  b.enforce(diff, eq, LinearCombination());

  const bool gt_value = !b.value(ge).is_zero() && !diff_value.is_zero();
  const Variable gt = b.alloc(gt_value ? Fr::one() : Fr::zero());
  b.enforce(gt, gt, gt);
  const LinearCombination lt = one - ge;
  b.enforce(lt + eq + gt, one, one);

  const Variable t_lt = b.alloc(b.value(mask_bits[0]) * b.value(lt));
  b.enforce(mask_bits[0], lt, t_lt);
  const Variable t_eq = b.alloc(b.value(mask_bits[1]) * b.value(eq));
  b.enforce(mask_bits[1], eq, t_eq);
  b.enforce(mask_bits[2], gt, one - t_lt - t_eq);

  return ComparisonWires{ge, eq, gt};
}

}  // namespace zklaims::gadgets
