#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zklaims/algebra/bn254.hpp"

namespace zklaims::algebra {

/// Multiplicative subgroup H of Fr of order 2^a * 3^b * 13^c (all of which
/// divide r - 1), with mixed-radix FFTs over H and over the coset g*H (g = 5).
/// Allowing the odd factors keeps |H| within a few percent of the requested
/// size instead of up to twice it.
class EvaluationDomain {
 public:
  /// Smallest such domain holding at least `min_size` points.
  explicit EvaluationDomain(std::size_t min_size);

  std::size_t size() const { return size_; }
  const Fr& generator() const { return omega_; }
  static Fr coset_shift() { return Fr::from_u64(FrParams::kMultiplicativeGenerator); }

  void fft(std::span<Fr> values) const;
  void ifft(std::span<Fr> values) const;
  void coset_fft(std::span<Fr> values) const;
  void icoset_fft(std::span<Fr> values) const;

  /// Z(t) = t^n - 1.
  Fr vanishing_at(const Fr& t) const;

  /// All n Lagrange basis polynomials evaluated at t (t outside the domain).
  std::vector<Fr> lagrange_coefficients(const Fr& t) const;

 private:
  std::size_t size_;
  std::vector<std::size_t> odd_factors_;
  Fr omega_;
  Fr omega_inv_;
  Fr size_inv_;
};

}  // namespace zklaims::algebra
