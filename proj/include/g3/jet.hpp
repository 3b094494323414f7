#pragma once

// Truncated Taylor arithmetic.
//
// Jet carries a value and its first three derivatives with respect to one
// variable; Jet2 carries a value, gradient and Hessian with respect to two
// variables. Both are ordinary value types so that the geometry templates
// (GVec3<Scalar> and friends) can be instantiated on them.

#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Core>

namespace g3 {

/// Elementary functions understood by the expression language.
enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Abs };

/// Derivatives phi(x), phi'(x), ... phi^(order)(x) of an elementary function.
/// Slots above `order` are zero. Throws Error(Domain) outside the domain.
std::array<double, 4> function_derivatives(Func fn, double x, int order);

/// Derivatives of x^p for a constant exponent p.
std::array<double, 4> power_derivatives(double x, double p, int order);

/// Derivatives of 1/x.
std::array<double, 4> reciprocal_derivatives(double x, int order);

struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  int order = 0;  // highest derivative carried; slots above it are zero

  constexpr Jet() = default;
  constexpr Jet(double v) : value(v) {}  // NOLINT: implicit lift of constants
  constexpr Jet(double v, double a, double b, double c, int ord)
      : value(v), d1(ord >= 1 ? a : 0.0), d2(ord >= 2 ? b : 0.0), d3(ord >= 3 ? c : 0.0), order(ord) {}

  /// The independent variable itself, seeded up to `order`.
  static constexpr Jet variable(double x, int order) { return Jet(x, 1.0, 0.0, 0.0, order); }

  constexpr double derivative(int k) const {
    switch (k) {
      case 0: return value;
      case 1: return d1;
      case 2: return d2;
      case 3: return d3;
      default: return 0.0;
    }
  }

  /// d/ds of this jet, one order lower.
  constexpr Jet differentiated() const {
    return order == 0 ? Jet(0.0) : Jet(d1, d2, d3, 0.0, order - 1);
  }

  constexpr bool is_constant() const { return d1 == 0.0 && d2 == 0.0 && d3 == 0.0; }
};

struct Jet2 {
  double value = 0.0;
  double du1 = 0.0;
  double du2 = 0.0;
  double du1u1 = 0.0;
  double du1u2 = 0.0;
  double du2u2 = 0.0;
  int order = 0;  // 0 for constants, 2 otherwise

  constexpr Jet2() = default;
  constexpr Jet2(double v) : value(v) {}  // NOLINT: implicit lift of constants

  static constexpr Jet2 variable(int index, double x) {
    Jet2 j(x);
    (index == 0 ? j.du1 : j.du2) = 1.0;
    j.order = 2;
    return j;
  }

  constexpr bool is_constant() const {
    return du1 == 0.0 && du2 == 0.0 && du1u1 == 0.0 && du1u2 == 0.0 && du2u2 == 0.0;
  }
};

// ---------------------------------------------------------------------------
// Jet arithmetic

constexpr Jet operator-(const Jet& a) { return Jet(-a.value, -a.d1, -a.d2, -a.d3, a.order); }

constexpr Jet operator+(const Jet& a, const Jet& b) {
  return Jet(a.value + b.value, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3, std::max(a.order, b.order));
}

constexpr Jet operator-(const Jet& a, const Jet& b) {
  return Jet(a.value - b.value, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3, std::max(a.order, b.order));
}

constexpr Jet operator*(const Jet& a, const Jet& b) {
  return Jet(a.value * b.value,
             a.d1 * b.value + a.value * b.d1,
             a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2,
             a.d3 * b.value + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.value * b.d3,
             std::max(a.order, b.order));
}

/// Faa di Bruno up to third order: phi holds phi(f), phi'(f), phi''(f), phi'''(f).
constexpr Jet lift(const Jet& f, const std::array<double, 4>& phi) {
  return Jet(phi[0],
             phi[1] * f.d1,
             phi[2] * f.d1 * f.d1 + phi[1] * f.d2,
             phi[3] * f.d1 * f.d1 * f.d1 + 3.0 * phi[2] * f.d1 * f.d2 + phi[1] * f.d3,
             f.order);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * lift(b, reciprocal_derivatives(b.value, b.order)); }

inline Jet& operator+=(Jet& a, const Jet& b) { return a = a + b; }
inline Jet& operator-=(Jet& a, const Jet& b) { return a = a - b; }
inline Jet& operator*=(Jet& a, const Jet& b) { return a = a * b; }
inline Jet& operator/=(Jet& a, const Jet& b) { return a = a / b; }

inline Jet sin(const Jet& x) { return lift(x, function_derivatives(Func::Sin, x.value, x.order)); }
inline Jet cos(const Jet& x) { return lift(x, function_derivatives(Func::Cos, x.value, x.order)); }
inline Jet exp(const Jet& x) { return lift(x, function_derivatives(Func::Exp, x.value, x.order)); }
inline Jet log(const Jet& x) { return lift(x, function_derivatives(Func::Log, x.value, x.order)); }
inline Jet sqrt(const Jet& x) { return lift(x, function_derivatives(Func::Sqrt, x.value, x.order)); }

// ---------------------------------------------------------------------------
// Jet2 arithmetic

constexpr Jet2 operator-(const Jet2& a) {
  Jet2 r;
  r.value = -a.value;
  r.du1 = -a.du1;
  r.du2 = -a.du2;
  r.du1u1 = -a.du1u1;
  r.du1u2 = -a.du1u2;
  r.du2u2 = -a.du2u2;
  r.order = a.order;
  return r;
}

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.value = a.value + b.value;
  r.du1 = a.du1 + b.du1;
  r.du2 = a.du2 + b.du2;
  r.du1u1 = a.du1u1 + b.du1u1;
  r.du1u2 = a.du1u2 + b.du1u2;
  r.du2u2 = a.du2u2 + b.du2u2;
  r.order = std::max(a.order, b.order);
  return r;
}

constexpr Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.value = a.value * b.value;
  r.du1 = a.du1 * b.value + a.value * b.du1;
  r.du2 = a.du2 * b.value + a.value * b.du2;
  r.du1u1 = a.du1u1 * b.value + 2.0 * a.du1 * b.du1 + a.value * b.du1u1;
  r.du1u2 = a.du1u2 * b.value + a.du1 * b.du2 + a.du2 * b.du1 + a.value * b.du1u2;
  r.du2u2 = a.du2u2 * b.value + 2.0 * a.du2 * b.du2 + a.value * b.du2u2;
  r.order = std::max(a.order, b.order);
  return r;
}

constexpr Jet2 lift(const Jet2& f, const std::array<double, 4>& phi) {
  Jet2 r;
  r.value = phi[0];
  r.du1 = phi[1] * f.du1;
  r.du2 = phi[1] * f.du2;
  r.du1u1 = phi[2] * f.du1 * f.du1 + phi[1] * f.du1u1;
  r.du1u2 = phi[2] * f.du1 * f.du2 + phi[1] * f.du1u2;
  r.du2u2 = phi[2] * f.du2 * f.du2 + phi[1] * f.du2u2;
  r.order = f.order;
  return r;
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  return a * lift(b, reciprocal_derivatives(b.value, b.order));
}

inline Jet2 sin(const Jet2& x) { return lift(x, function_derivatives(Func::Sin, x.value, x.order)); }
inline Jet2 cos(const Jet2& x) { return lift(x, function_derivatives(Func::Cos, x.value, x.order)); }
inline Jet2 sqrt(const Jet2& x) { return lift(x, function_derivatives(Func::Sqrt, x.value, x.order)); }

// ---------------------------------------------------------------------------
// Uniform access used by the templated evaluator and geometry code.

constexpr double value_of(double x) { return x; }
constexpr double value_of(const Jet& x) { return x.value; }
constexpr double value_of(const Jet2& x) { return x.value; }

constexpr int order_of(double) { return 0; }
constexpr int order_of(const Jet& x) { return x.order; }
constexpr int order_of(const Jet2& x) { return x.order; }

constexpr bool is_constant(double) { return true; }
constexpr bool is_constant(const Jet& x) { return x.is_constant(); }
constexpr bool is_constant(const Jet2& x) { return x.is_constant(); }

constexpr double lift(double, const std::array<double, 4>& phi) { return phi[0]; }

}  // namespace g3

namespace Eigen {

template <>
struct NumTraits<g3::Jet> : GenericNumTraits<double> {
  using Real = g3::Jet;
  using NonInteger = g3::Jet;
  using Nested = g3::Jet;
  using Literal = g3::Jet;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 16,
  };
  static inline Real epsilon() { return Real(std::numeric_limits<double>::epsilon()); }
  static inline Real dummy_precision() { return Real(1e-12); }
  static inline Real highest() { return Real(std::numeric_limits<double>::max()); }
  static inline Real lowest() { return Real(std::numeric_limits<double>::lowest()); }
  static inline int digits10() { return std::numeric_limits<double>::digits10; }
};

}  // namespace Eigen
