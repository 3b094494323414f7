#include "g3/galilean.hpp"

#include <algorithm>
#include <cmath>

namespace g3 {

namespace {
constexpr double kUnitTol = 1e-9;
}

AngleMeasure angle(const Vec& a, const Vec& b) {
  const bool ia = a.is_isotropic();
  const bool ib = b.is_isotropic();
  if (!ia && !ib) {
    if (std::abs(a.x() - 1.0) > kUnitTol || std::abs(b.x() - 1.0) > kUnitTol)
      throw Error(ErrorCode::Precondition, "angle between non-isotropic vectors needs first components equal to 1");
    return {std::hypot(b.y() - a.y(), b.z() - a.z()), AngleKind::NonIsotropicPair};
  }
  if (ia != ib) {
    const Vec& iso = ia ? a : b;
    const Vec& other = ia ? b : a;
    const double len = euclid_norm(iso);
    if (len == 0.0) throw Error(ErrorCode::Precondition, "angle with a zero isotropic vector");
    return {euclid_dot(other, iso) / len, AngleKind::MixedPair};
  }
  const double la = euclid_norm(a);
  const double lb = euclid_norm(b);
  if (la == 0.0 || lb == 0.0) throw Error(ErrorCode::Precondition, "angle with a zero isotropic vector");
  const double c = std::clamp(euclid_dot(a, b) / (la * lb), -1.0, 1.0);
  return {std::acos(c), AngleKind::IsotropicPair};
}

Eigen::Matrix3d GalileanMotion::linear() const {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Eigen::Matrix3d m;
  m << 1.0, 0.0, 0.0,
       c1, c, s,
       e1, -s, c;
  return m;
}

Vec apply_motion(const GalileanMotion& m, const Vec& p, bool as_direction) {
  Eigen::Vector3d out = m.linear() * p.coeffs();
  if (!as_direction) out += m.translation();
  return Vec(out);
}

GalileanMotion compose(const GalileanMotion& outer, const GalileanMotion& inner) {
  const Eigen::Matrix3d lin = outer.linear() * inner.linear();
  const Eigen::Vector3d t = outer.linear() * inner.translation() + outer.translation();
  GalileanMotion m;
  m.a = t[0];
  m.b = t[1];
  m.d0 = t[2];
  m.c1 = lin(1, 0);
  m.e1 = lin(2, 0);
  m.phi = std::atan2(lin(1, 2), lin(1, 1));
  return m;
}

Vec normalize_axis(const Vec& d) {
  if (d.is_isotropic()) {
    const double len = euclid_norm(d);
    if (len == 0.0) throw Error(ErrorCode::Precondition, "axis is the zero vector");
    return Vec(0.0, d.y() / len, d.z() / len);
  }
  return Vec(1.0, d.y() / d.x(), d.z() / d.x());
}

}  // namespace g3
