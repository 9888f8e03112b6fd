#include "zklaims/algebra/fft.hpp"

#include <stdexcept>
#include <utility>

namespace zklaims::algebra {

namespace {


U256 divide(const U256& a, std::uint64_t d) {
  U256 q;
  unsigned __int128 rem = 0;
  for (int i = 3; i >= 0; --i) {
    const unsigned __int128 cur = (rem << 64) | a.limb[i];
    q.limb[i] = static_cast<std::uint64_t>(cur / d);
    rem = cur % d;
  }
  if (rem != 0) throw std::logic_error("domain size does not divide r - 1");
  return q;
}

// In-place radix-2 transform of a power-of-two length sequence.
void radix2(std::span<Fr> a, const Fr& root) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; (j & bit) != 0; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<Fr> twiddles(n / 2 > 0 ? n / 2 : 1);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    // root^(n / len) is a primitive len-th root of unity
    Fr w_len = root;
    for (std::size_t k = len; k < n; k <<= 1) w_len = w_len.squared();
    const std::size_t half = len / 2;
    twiddles[0] = Fr::one();
    for (std::size_t k = 1; k < half; ++k) twiddles[k] = twiddles[k - 1] * w_len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Fr u = a[start + k];
        const Fr v = a[start + k + half] * twiddles[k];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

// Cooley-Tukey step n = p * q peeling one odd prime p:
//   X[k1 + q k2] = sum_j1 w^(q j1 k2) * w^(j1 k1) * DFT_q(x[p j2 + j1])[k1]
void transform(std::span<Fr> a, const Fr& root, std::span<const std::size_t> odd) {
  if (odd.empty()) {
    radix2(a, root);
    return;
  }
  const std::size_t n = a.size();
  const std::size_t p = odd.front();
  const std::size_t q = n / p;

  std::vector<Fr> cols(n);
  for (std::size_t j1 = 0; j1 < p; ++j1) {
    for (std::size_t j2 = 0; j2 < q; ++j2) cols[j1 * q + j2] = a[p * j2 + j1];
  }
  const Fr root_p = root.pow(U256::from_u64(p));
  for (std::size_t j1 = 0; j1 < p; ++j1) {
    transform(std::span(cols).subspan(j1 * q, q), root_p, odd.subspan(1));
  }

  // e = root^q has order p. Outputs k2 and p - k2 share work through
  // C[t] = (e^t + e^-t) / 2 and S[t] = (e^t - e^-t) / 2.
  const Fr e = root.pow(U256::from_u64(q));
  const Fr half = Fr::from_u64(2).inverse();
  std::vector<Fr> cos_t(p), sin_t(p);
  {
    Fr et = Fr::one();
    for (std::size_t t = 0; t < p; ++t) {
      const Fr inv = et.inverse();
      cos_t[t] = (et + inv) * half;
      sin_t[t] = (et - inv) * half;
      et *= e;
    }
  }

  const std::size_t h = p / 2;
  std::vector<Fr> z(p), u(h + 1), v(h + 1);
  Fr w_k1 = Fr::one();
  for (std::size_t k1 = 0; k1 < q; ++k1) {
    Fr tw = Fr::one();
    for (std::size_t j1 = 0; j1 < p; ++j1) {
      z[j1] = cols[j1 * q + k1] * tw;
      tw *= w_k1;
    }
    Fr sum = z[0];
    for (std::size_t j = 1; j <= h; ++j) {
      u[j] = z[j] + z[p - j];
      v[j] = z[j] - z[p - j];
      sum += u[j];
    }
    a[k1] = sum;
    for (std::size_t k2 = 1; k2 <= h; ++k2) {
      Fr even = z[0];
      Fr odd;
      for (std::size_t j = 1; j <= h; ++j) {
        const std::size_t t = (j * k2) % p;
        even += u[j] * cos_t[t];
        odd += v[j] * sin_t[t];
      }
      a[k1 + q * k2] = even + odd;
      a[k1 + q * (p - k2)] = even - odd;
    }
    w_k1 *= root;
  }
}

}  // namespace

EvaluationDomain::EvaluationDomain(std::size_t min_size) {
  // Smallest 2^a * 3^b * 13^c >= min_size.
  size_ = 0;
  for (std::size_t b = 0; b <= 2; ++b) {
    for (std::size_t c = 0; c <= 1; ++c) {
      std::size_t odd = 1;
      for (std::size_t i = 0; i < b; ++i) odd *= 3;
      for (std::size_t i = 0; i < c; ++i) odd *= 13;
      std::size_t n = odd;
      std::size_t log2 = 0;
      while (n < min_size) {
        n <<= 1;
        ++log2;
      }
      if (log2 > FrParams::kTwoAdicity) continue;
      if (size_ == 0 || n < size_) {
        size_ = n;
        odd_factors_.clear();
        for (std::size_t i = 0; i < c; ++i) odd_factors_.push_back(13);
        for (std::size_t i = 0; i < b; ++i) odd_factors_.push_back(3);
      }
    }
  }
  if (size_ == 0) throw std::length_error("evaluation domain too large");

  U256 r_minus_one = FrParams::kModulus;
  r_minus_one.limb[0] -= 1;
  omega_ = Fr::from_u64(FrParams::kMultiplicativeGenerator).pow(divide(r_minus_one, size_));
  // omega must have order exactly n.
  for (std::size_t prime : {std::size_t{2}, std::size_t{3}, std::size_t{13}}) {
    if (size_ % prime != 0) continue;
    if (omega_.pow(U256::from_u64(size_ / prime)).is_one()) {
      throw std::logic_error("domain generator has the wrong order");
    }
  }
  omega_inv_ = omega_.inverse();
  size_inv_ = Fr::from_u64(size_).inverse();
}

void EvaluationDomain::fft(std::span<Fr> values) const { transform(values, omega_, odd_factors_); }

void EvaluationDomain::ifft(std::span<Fr> values) const {
  transform(values, omega_inv_, odd_factors_);
  for (auto& v : values) v *= size_inv_;
}

void EvaluationDomain::coset_fft(std::span<Fr> values) const {
  const Fr g = coset_shift();
  Fr power = Fr::one();
  for (auto& v : values) {
    v *= power;
    power *= g;
  }
  fft(values);
}

void EvaluationDomain::icoset_fft(std::span<Fr> values) const {
  ifft(values);
  const Fr g_inv = coset_shift().inverse();
  Fr power = Fr::one();
  for (auto& v : values) {
    v *= power;
    power *= g_inv;
  }
}

Fr EvaluationDomain::vanishing_at(const Fr& t) const {
  return t.pow(U256::from_u64(size_)) - Fr::one();
}

std::vector<Fr> EvaluationDomain::lagrange_coefficients(const Fr& t) const {
  // L_i(t) = Z(t) / n * w^i / (t - w^i)
  std::vector<Fr> denom(size_);
  std::vector<Fr> powers(size_);
  Fr w = Fr::one();
  for (std::size_t i = 0; i < size_; ++i) {
    powers[i] = w;
    denom[i] = t - w;
    w *= omega_;
  }
  batch_invert(std::span<Fr>(denom));
  const Fr scale = vanishing_at(t) * size_inv_;
  std::vector<Fr> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = scale * powers[i] * denom[i];
  return out;
}

}  // namespace zklaims::algebra
