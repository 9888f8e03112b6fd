#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zklaims/algebra/bn254.hpp"

namespace zklaims::algebra {

/// y^2 = x^3 + 3 over Fq.
struct G1Curve {
  using Field = Fq;
  static Field b() { return Fq::from_u64(3); }
};

/// Sextic D-twist y^2 = x^3 + 3/xi over Fq2.
struct G2Curve {
  using Field = Fq2;
  static Field b();
};

template <class Curve>
struct AffinePoint {
  using Field = typename Curve::Field;

  Field x{}, y{};
  bool infinity = true;

  static AffinePoint identity() { return {}; }

  bool is_on_curve() const {
    if (infinity) return true;
    return y.squared() == x.squared() * x + Curve::b();
  }

  AffinePoint operator-() const {
    AffinePoint r = *this;
    if (!infinity) r.y = -y;
    return r;
  }

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

/// Jacobian coordinates (X/Z^2, Y/Z^3); Z = 0 is the point at infinity.
template <class Curve>
class JacobianPoint {
 public:
  using Field = typename Curve::Field;
  using Affine = AffinePoint<Curve>;

  Field x{}, y{}, z{};

  JacobianPoint() : x(), y(Field::one()), z() {}
  JacobianPoint(const Field& x_, const Field& y_, const Field& z_) : x(x_), y(y_), z(z_) {}
  explicit JacobianPoint(const Affine& p)
      : x(p.x), y(p.infinity ? Field::one() : p.y), z(p.infinity ? Field() : Field::one()) {}

  static JacobianPoint identity() { return {}; }
  bool is_identity() const { return z.is_zero(); }

  JacobianPoint doubled() const {
    if (is_identity()) return *this;
    // dbl-2009-l
    const Field a = x.squared();
    const Field b = y.squared();
    const Field c = b.squared();
    const Field d = ((x + b).squared() - a - c).doubled();
    const Field e = a.doubled() + a;
    const Field f = e.squared();
    JacobianPoint r;
    r.x = f - d.doubled();
    r.y = e * (d - r.x) - c.doubled().doubled().doubled();
    r.z = (y * z).doubled();
    return r;
  }

  JacobianPoint operator+(const JacobianPoint& o) const {
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    // add-2007-bl
    const Field z1z1 = z.squared();
    const Field z2z2 = o.z.squared();
    const Field u1 = x * z2z2;
    const Field u2 = o.x * z1z1;
    const Field s1 = y * o.z * z2z2;
    const Field s2 = o.y * z * z1z1;
    if (u1 == u2) {
      if (s1 == s2) return doubled();
      return identity();
    }
    const Field h = u2 - u1;
    const Field i = h.doubled().squared();
    const Field j = h * i;
    const Field r = (s2 - s1).doubled();
    const Field v = u1 * i;
    JacobianPoint out;
    out.x = r.squared() - j - v.doubled();
    out.y = r * (v - out.x) - (s1 * j).doubled();
    out.z = ((z + o.z).squared() - z1z1 - z2z2) * h;
    return out;
  }

  /// Mixed addition with an affine point.
  JacobianPoint operator+(const Affine& o) const {
    if (o.infinity) return *this;
    if (is_identity()) return JacobianPoint(o);
    // madd-2007-bl
    const Field z1z1 = z.squared();
    const Field u2 = o.x * z1z1;
    const Field s2 = o.y * z * z1z1;
    if (u2 == x) {
      if (s2 == y) return doubled();
      return identity();
    }
    const Field h = u2 - x;
    const Field hh = h.squared();
    const Field i = hh.doubled().doubled();
    const Field j = h * i;
    const Field r = (s2 - y).doubled();
    const Field v = x * i;
    JacobianPoint out;
    out.x = r.squared() - j - v.doubled();
    out.y = r * (v - out.x) - (y * j).doubled();
    out.z = (z + h).squared() - z1z1 - hh;
    return out;
  }

  JacobianPoint& operator+=(const JacobianPoint& o) { return *this = *this + o; }
  JacobianPoint& operator+=(const Affine& o) { return *this = *this + o; }

  JacobianPoint operator-() const { return {x, -y, z}; }
  JacobianPoint operator-(const JacobianPoint& o) const { return *this + (-o); }

  JacobianPoint mul(const U256& k) const {
    JacobianPoint acc;
    for (std::size_t i = k.num_bits(); i-- > 0;) {
      acc = acc.doubled();
      if (k.bit(i)) acc += *this;
    }
    return acc;
  }
  JacobianPoint operator*(const Fr& k) const { return mul(k.to_canonical()); }

  Affine to_affine() const {
    if (is_identity()) return Affine::identity();
    const Field zi = z.inverse();
    const Field zi2 = zi.squared();
    return Affine{x * zi2, y * zi2 * zi, false};
  }

  bool is_on_curve() const {
    if (is_identity()) return true;
    const Field z2 = z.squared();
    const Field z6 = z2.squared() * z2;
    return y.squared() == x.squared() * x + Curve::b() * z6;
  }

  friend bool operator==(const JacobianPoint& a, const JacobianPoint& b) {
    if (a.is_identity() || b.is_identity()) return a.is_identity() == b.is_identity();
    const Field az2 = a.z.squared();
    const Field bz2 = b.z.squared();
    return a.x * bz2 == b.x * az2 && a.y * bz2 * b.z == b.y * az2 * a.z;
  }
};

using G1 = JacobianPoint<G1Curve>;
using G2 = JacobianPoint<G2Curve>;
using G1Affine = AffinePoint<G1Curve>;
using G2Affine = AffinePoint<G2Curve>;

G1Affine g1_generator();
G2Affine g2_generator();

/// Converts many points with a single field inversion.
template <class Curve>
std::vector<AffinePoint<Curve>> batch_to_affine(std::span<const JacobianPoint<Curve>> points) {
  using Field = typename Curve::Field;
  std::vector<Field> zs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) zs[i] = points[i].z;
  batch_invert(std::span<Field>(zs));
  std::vector<AffinePoint<Curve>> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_identity()) continue;
    const Field zi2 = zs[i].squared();
    out[i] = AffinePoint<Curve>{points[i].x * zi2, points[i].y * zi2 * zs[i], false};
  }
  return out;
}

/// r * Q == O; G1 has cofactor 1 so only G2 needs this.
bool in_prime_subgroup(const G2Affine& q);

}  // namespace zklaims::algebra
