#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zklaims/algebra/curve.hpp"

namespace zklaims::algebra {

namespace detail {

// Window width minimizing windows * (n mixed additions + bucket reduction),
// with a full addition weighted 1.4 mixed additions.
inline std::size_t pippenger_window(std::size_t n) {
  std::size_t best_c = 2;
  double best = 1e300;
  for (std::size_t c = 2; c <= 18; ++c) {
    const double windows = static_cast<double>(254 / c + 1);
    const double cost = windows * (static_cast<double>(n) + 2.8 * static_cast<double>(1U << (c - 1)));
    if (cost < best) {
      best = cost;
      best_c = c;
    }
  }
  return best_c;
}

// Signed base-2^c digits in [-2^(c-1), 2^(c-1)] of a scalar below 2^254.
inline void signed_digits(const U256& k, std::size_t c, std::size_t windows, std::int32_t* out) {
  const std::int64_t half = std::int64_t{1} << (c - 1);
  const std::int64_t full = std::int64_t{1} << c;
  std::int64_t carry = 0;
  for (std::size_t w = 0; w < windows; ++w) {
    std::int64_t d = static_cast<std::int64_t>(k.bits(w * c, c)) + carry;
    carry = d > half ? 1 : 0;
    d -= carry * full;
    out[w] = static_cast<std::int32_t>(d);
  }
}

}  // namespace detail

/// sum_i scalars[i] * bases[i]. Zero and one scalars (common in boolean
/// witnesses) bypass the bucket method.
template <class Curve>
JacobianPoint<Curve> msm(std::span<const AffinePoint<Curve>> bases, std::span<const Fr> scalars) {
  using Point = JacobianPoint<Curve>;
  const std::size_t n = std::min(bases.size(), scalars.size());

  Point trivial;
  std::vector<std::size_t> big_index;
  for (std::size_t i = 0; i < n; ++i) {
    if (scalars[i].is_zero() || bases[i].infinity) continue;
    if (scalars[i].is_one()) {
      trivial += bases[i];
      continue;
    }
    big_index.push_back(i);
  }
  if (big_index.empty()) return trivial;

  const std::size_t c = detail::pippenger_window(big_index.size());
  const std::size_t windows = 254 / c + 1;
  std::vector<std::int32_t> digits(big_index.size() * windows);
  for (std::size_t i = 0; i < big_index.size(); ++i) {
    detail::signed_digits(scalars[big_index[i]].to_canonical(), c, windows, &digits[i * windows]);
  }

  std::vector<Point> buckets(std::size_t{1} << (c - 1));
  Point result;
  for (std::size_t w = windows; w-- > 0;) {
    for (std::size_t k = 0; k < c; ++k) result = result.doubled();
    std::fill(buckets.begin(), buckets.end(), Point());
    for (std::size_t i = 0; i < big_index.size(); ++i) {
      const std::int32_t d = digits[i * windows + w];
      if (d > 0) {
        buckets[static_cast<std::size_t>(d - 1)] += bases[big_index[i]];
      } else if (d < 0) {
        buckets[static_cast<std::size_t>(-d - 1)] += -bases[big_index[i]];
      }
    }
    Point running;
    Point window_sum;
    for (std::size_t b = buckets.size(); b-- > 0;) {
      running += buckets[b];
      window_sum += running;
    }
    result += window_sum;
  }
  return result + trivial;
}

/// Computes scalars[i] * generator for many scalars with a shared
/// windowed table; results are normalized to affine.
template <class Curve>
std::vector<AffinePoint<Curve>> fixed_base_batch_mul(const AffinePoint<Curve>& generator,
                                                     std::span<const Fr> scalars) {
  using Point = JacobianPoint<Curve>;
  using Affine = AffinePoint<Curve>;
  const std::size_t n = scalars.size();
  if (n == 0) return {};

  std::size_t c = 1;
  double best = 1e300;
  for (std::size_t w = 1; w <= 16; ++w) {
    const double windows = static_cast<double>((254 + w - 1) / w);
    const double cost = windows * (static_cast<double>(n) + static_cast<double>(1U << w));
    if (cost < best) {
      best = cost;
      c = w;
    }
  }
  const std::size_t num_windows = (254 + c - 1) / c;
  const std::size_t per_window = (std::size_t{1} << c) - 1;

  std::vector<Point> table_jac;
  table_jac.reserve(num_windows * per_window);
  Point base(generator);
  for (std::size_t w = 0; w < num_windows; ++w) {
    Point acc = base;
    for (std::size_t k = 0; k < per_window; ++k) {
      table_jac.push_back(acc);
      acc += base;
    }
    for (std::size_t k = 0; k < c; ++k) base = base.doubled();
  }
  const std::vector<Affine> table = batch_to_affine<Curve>(table_jac);
  table_jac.clear();
  table_jac.shrink_to_fit();

  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (scalars[i].is_zero()) continue;
    const U256 k = scalars[i].to_canonical();
    Point acc;
    for (std::size_t w = 0; w < num_windows; ++w) {
      const std::size_t digit =
          static_cast<std::size_t>(k.bits(w * c, std::min(c, std::size_t{256} - w * c)));
      if (digit != 0) acc += table[w * per_window + digit - 1];
    }
    out[i] = acc;
  }
  return batch_to_affine<Curve>(out);
}

}  // namespace zklaims::algebra
