#pragma once

// Metric core of Galilean 3-space: tagged vectors, the degenerate scalar
// product, norm and cross product, the three angle measures, and the motion
// group. Vector operations are templated on the scalar so they run unchanged
// on Jet values when derivatives along a curve are needed.

#include <cmath>

#include <Eigen/Core>

#include "g3/error.hpp"
#include "g3/jet.hpp"

namespace g3 {

/// A vector is isotropic when its first component is zero up to this bound.
inline constexpr double kIsotropyTol = 1e-12;

template <typename Scalar = double>
class GVec3 {
 public:
  using Vector = Eigen::Matrix<Scalar, 3, 1>;

  GVec3() : v_(Scalar(0.0), Scalar(0.0), Scalar(0.0)) {}
  GVec3(const Scalar& x, const Scalar& y, const Scalar& z) : v_(x, y, z) {}
  explicit GVec3(const Vector& v) : v_(v) {}

  const Scalar& x() const { return v_[0]; }
  const Scalar& y() const { return v_[1]; }
  const Scalar& z() const { return v_[2]; }
  const Scalar& operator[](int i) const { return v_[i]; }
  const Vector& coeffs() const { return v_; }

  /// Derived tag; never stored.
  bool is_isotropic() const { return std::abs(value_of(v_[0])) <= kIsotropyTol; }

  friend GVec3 operator+(const GVec3& a, const GVec3& b) { return GVec3(a.x() + b.x(), a.y() + b.y(), a.z() + b.z()); }
  friend GVec3 operator-(const GVec3& a, const GVec3& b) { return GVec3(a.x() - b.x(), a.y() - b.y(), a.z() - b.z()); }
  friend GVec3 operator-(const GVec3& a) { return GVec3(-a.x(), -a.y(), -a.z()); }
  friend GVec3 operator*(const Scalar& k, const GVec3& a) { return GVec3(k * a.x(), k * a.y(), k * a.z()); }
  friend GVec3 operator*(const GVec3& a, const Scalar& k) { return k * a; }

 private:
  Vector v_;
};

using Vec = GVec3<double>;

/// Values of a Jet-valued vector.
inline Vec value_of(const GVec3<Jet>& v) { return Vec(v.x().value, v.y().value, v.z().value); }

/// d/ds of a Jet-valued vector.
inline GVec3<Jet> differentiated(const GVec3<Jet>& v) {
  return GVec3<Jet>(v.x().differentiated(), v.y().differentiated(), v.z().differentiated());
}

/// Euclidean product of the yz projections: the isotropic branch of the
/// Galilean product, applied regardless of the first components.
template <typename Scalar>
Scalar euclid_dot(const GVec3<Scalar>& a, const GVec3<Scalar>& b) {
  return a.y() * b.y() + a.z() * b.z();
}

template <typename Scalar>
Scalar euclid_norm(const GVec3<Scalar>& a) {
  using std::sqrt;
  return sqrt(euclid_dot(a, a));
}

template <typename Scalar>
Scalar gdot(const GVec3<Scalar>& a, const GVec3<Scalar>& b) {
  if (!a.is_isotropic() || !b.is_isotropic()) return a.x() * b.x();
  return euclid_dot(a, b);
}

template <typename Scalar>
Scalar gnorm(const GVec3<Scalar>& a) {
  if (!a.is_isotropic()) return value_of(a.x()) < 0.0 ? Scalar(-a.x()) : a.x();
  return euclid_norm(a);
}

/// Determinant with first row (0, e2, e3); the result is always isotropic.
template <typename Scalar>
GVec3<Scalar> gcross(const GVec3<Scalar>& a, const GVec3<Scalar>& b) {
  return GVec3<Scalar>(Scalar(0.0), a.z() * b.x() - a.x() * b.z(), a.x() * b.y() - a.y() * b.x());
}

enum class AngleKind {
  NonIsotropicPair,   // distance of the yz parts of two unit non-isotropic vectors
  MixedPair,          // projection measure of a non-isotropic vector on an isotropic one
  IsotropicPair,      // Euclidean angle between two isotropic vectors, in radians
};

/// An angle measure tagged by the pair of vector kinds it was taken between.
/// Only IsotropicPair is an angle in radians.
struct AngleMeasure {
  double value = 0.0;
  AngleKind kind = AngleKind::IsotropicPair;
};

AngleMeasure angle(const Vec& a, const Vec& b);

/// Six-parameter motion: x' = a + x, y' = b + c1 x + y cos(phi) + z sin(phi),
/// z' = d0 + e1 x - y sin(phi) + z cos(phi).
struct GalileanMotion {
  double a = 0.0;
  double b = 0.0;
  double d0 = 0.0;
  double c1 = 0.0;
  double e1 = 0.0;
  double phi = 0.0;

  Eigen::Matrix3d linear() const;
  Eigen::Vector3d translation() const { return {a, b, d0}; }
};

/// Points get the full affine map; directions only the linear part.
Vec apply_motion(const GalileanMotion& m, const Vec& p, bool as_direction = false);

/// apply(compose(outer, inner), p) == apply(outer, apply(inner, p)).
GalileanMotion compose(const GalileanMotion& outer, const GalileanMotion& inner);

/// Isotropic vectors to unit yz-length, non-isotropic ones to first component 1.
Vec normalize_axis(const Vec& d);

}  // namespace g3
