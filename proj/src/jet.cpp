#include "g3/jet.hpp"

#include <cmath>
#include <string>

#include "g3/error.hpp"

namespace g3 {

namespace {

[[noreturn]] void domain_error(const std::string& what) { throw Error(ErrorCode::Domain, what); }

std::array<double, 4> truncated(std::array<double, 4> d, int order) {
  for (int k = order + 1; k < 4; ++k) d[static_cast<std::size_t>(k)] = 0.0;
  return d;
}

}  // namespace

std::array<double, 4> function_derivatives(Func fn, double x, int order) {
  switch (fn) {
    case Func::Sin: {
      const double s = std::sin(x), c = std::cos(x);
      return truncated({s, c, -s, -c}, order);
    }
    case Func::Cos: {
      const double s = std::sin(x), c = std::cos(x);
      return truncated({c, -s, -c, s}, order);
    }
    case Func::Tan: {
      if (std::cos(x) == 0.0) domain_error("tan at a pole");
      const double t = std::tan(x);
      const double sec2 = 1.0 + t * t;
      return truncated({t, sec2, 2.0 * t * sec2, 2.0 * sec2 * (1.0 + 3.0 * t * t)}, order);
    }
    case Func::Exp: {
      const double e = std::exp(x);
      return truncated({e, e, e, e}, order);
    }
    case Func::Log: {
      if (x <= 0.0) domain_error("log of a non-positive value");
      return truncated({std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)}, order);
    }
    case Func::Sqrt: {
      if (x < 0.0) domain_error("sqrt of a negative value");
      const double r = std::sqrt(x);
      if (order == 0) return {r, 0.0, 0.0, 0.0};
      if (x == 0.0) domain_error("sqrt is not differentiable at 0");
      return truncated({r, 0.5 / r, -0.25 / (x * r), 0.375 / (x * x * r)}, order);
    }
    case Func::Sinh: {
      const double s = std::sinh(x), c = std::cosh(x);
      return truncated({s, c, s, c}, order);
    }
    case Func::Cosh: {
      const double s = std::sinh(x), c = std::cosh(x);
      return truncated({c, s, c, s}, order);
    }
    case Func::Abs: {
      if (order == 0) return {std::abs(x), 0.0, 0.0, 0.0};
      if (x == 0.0) domain_error("abs is not differentiable at 0");
      return truncated({std::abs(x), x > 0.0 ? 1.0 : -1.0, 0.0, 0.0}, order);
    }
  }
  domain_error("unknown function");
}

std::array<double, 4> reciprocal_derivatives(double x, int order) {
  if (x == 0.0) domain_error("division by zero");
  const double r = 1.0 / x;
  return truncated({r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r}, order);
}

std::array<double, 4> power_derivatives(double x, double p, int order) {
  const bool integral = std::floor(p) == p;
  if (x < 0.0 && !integral) domain_error("negative base with a non-integer exponent");
  std::array<double, 4> d{};
  double coefficient = 1.0;
  for (int k = 0; k <= order && k < 4; ++k) {
    if (k > 0) coefficient *= p - (k - 1);
    if (coefficient == 0.0) {
      d[static_cast<std::size_t>(k)] = 0.0;
      continue;
    }
    const double e = p - k;
    if (x == 0.0 && e < 0.0) domain_error("division by zero in power");
    d[static_cast<std::size_t>(k)] = coefficient * std::pow(x, e);
  }
  return d;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::UnknownIdentifier: return "unknown-identifier";
    case ErrorCode::Arity: return "arity";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::StraightSegment: return "straight-segment";
    case ErrorCode::SingularNormal: return "singular-normal";
    case ErrorCode::InadmissibleTrace: return "inadmissible-trace";
    case ErrorCode::NotLineOfCurvature: return "not-line-of-curvature";
    case ErrorCode::NotAsymptotic: return "not-asymptotic";
    case ErrorCode::ConstraintViolated: return "constraint-violated";
    case ErrorCode::ConstancyViolated: return "constancy-violated";
    case ErrorCode::AxisUndefined: return "axis-undefined";
    case ErrorCode::Io: return "io";
    case ErrorCode::Scene: return "scene";
  }
  return "unknown";
}

}  // namespace g3
