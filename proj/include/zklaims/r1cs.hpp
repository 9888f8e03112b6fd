#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zklaims/algebra/bn254.hpp"

namespace zklaims::r1cs {

using algebra::Fr;

/// Index into the full assignment z; index 0 is the constant 1, followed by
/// the public inputs, then the auxiliary (private) variables.
struct Variable {
  std::uint32_t index = 0;
};

struct Term {
  std::uint32_t index;
  Fr coeff;
};

class LinearCombination {
 public:
  LinearCombination() = default;
  LinearCombination(Variable v) : terms_{{v.index, Fr::one()}} {}  // NOLINT(google-explicit-constructor)

  static LinearCombination constant(const Fr& c) {
    LinearCombination lc;
    if (!c.is_zero()) lc.terms_.push_back({0, c});
    return lc;
  }
  static LinearCombination constant(std::uint64_t c) { return constant(Fr::from_u64(c)); }

  void add_term(Variable v, const Fr& coeff) { terms_.push_back({v.index, coeff}); }
  void add_constant(const Fr& c) { terms_.push_back({0, c}); }

  LinearCombination& operator+=(const LinearCombination& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& t : o.terms_) terms_.push_back({t.index, -t.coeff});
    return *this;
  }
  LinearCombination operator*(const Fr& s) const {
    LinearCombination out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.index, t.coeff * s});
    return out;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }

  Fr evaluate(std::span<const Fr> z) const {
    Fr acc;
    for (const auto& t : terms_) {
      if (t.coeff.is_one()) {
        acc += z[t.index];
      } else {
        acc += z[t.index] * t.coeff;
      }
    }
    return acc;
  }

  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

/// a * b = c
struct Constraint {
  LinearCombination a, b, c;
};

class ConstraintSystem {
 public:
  std::size_t num_inputs = 0;     // public inputs, excluding the constant
  std::size_t num_variables = 0;  // inputs + auxiliary, excluding the constant
  std::vector<Constraint> constraints;

  std::size_t num_aux() const { return num_variables - num_inputs; }

  /// `z` is the full assignment including z[0] = 1.
  std::optional<std::size_t> first_unsatisfied(std::span<const Fr> z) const;
  /// Restricted to constraints [begin, end).
  std::optional<std::size_t> first_unsatisfied(std::span<const Fr> z, std::size_t begin,
                                               std::size_t end) const;
  bool is_satisfied(std::span<const Fr> z) const { return !first_unsatisfied(z).has_value(); }

  /// SHA-256 over a canonical encoding of the whole system.
  std::array<std::uint8_t, 32> fingerprint() const;
};

}  // namespace zklaims::r1cs
