#include "doctest.h"

#include <cmath>
#include <numbers>

#include "g3/expr.hpp"

using namespace g3;

namespace {

ErrorCode code_of(const char* src, const std::vector<std::string>& vars = {"s"}, const ParamMap& p = {}) {
  try {
    parse(src, vars, p);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error for " << src);
  return ErrorCode::Io;
}

double eval(const char* src, double s) { return evaluate(parse(src, {"s"}), s); }

}  // namespace

TEST_CASE("grammar") {
  CHECK_NOTHROW(parse("s^2/(2*c)", {"s"}, {{"c", 1.0}}));
  CHECK(eval("1 + 2*3", 0.0) == 7.0);
  CHECK(eval("2^3^2", 0.0) == 512.0);
  CHECK(eval("-2^2", 0.0) == -4.0);
  CHECK(eval("2^-1", 0.0) == 0.5);
  CHECK(eval("(1 - s)*(1 + s)", 0.5) == 0.75);
  CHECK(eval("1.5e1 + .5", 0.0) == 15.5);
  CHECK(eval("pi", 0.0) == std::numbers::pi);
  CHECK(eval("e", 0.0) == std::numbers::e);
  CHECK(eval("8/4/2", 0.0) == 1.0);
  CHECK(eval("cosh(0) + sinh(0) + tan(0)", 0.0) == 1.0);
}

TEST_CASE("errors") {
  CHECK(code_of("g(s)*sin(t)", {"s", "t"}) == ErrorCode::UnknownIdentifier);
  CHECK(code_of("2s") == ErrorCode::Syntax);
  CHECK(code_of("") == ErrorCode::Syntax);
  CHECK(code_of("s +") == ErrorCode::Syntax);
  CHECK(code_of("(s") == ErrorCode::Syntax);
  CHECK(code_of("s(1)") == ErrorCode::Syntax);
  CHECK(code_of("sin()") == ErrorCode::Arity);
  CHECK(code_of("sin(s, s)") == ErrorCode::Arity);
  CHECK(code_of("s", {"s", "s"}) == ErrorCode::Precondition);
  CHECK(code_of("s", {"pi"}) == ErrorCode::Precondition);
  CHECK(code_of("s", {"s"}, {{"s", 1.0}}) == ErrorCode::Precondition);
  try {
    parse("s + $", {"s"});
  } catch (const Error& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("printing round-trips") {
  for (const char* src : {"s^2/(2*c)", "-(s + 1)^2", "sin(s)*cos(2*s) - exp(-s)", "s - (1 - s)", "2^3^s", "(2^3)^s",
                          "s/(s*2)", "-s^2"}) {
    const Expr a = parse(src, {"s"}, {{"c", 3.0}});
    const Expr b = parse(to_string(a), {"s"});
    for (double s : {-0.7, 0.3, 1.1}) CHECK(evaluate(a, s) == doctest::Approx(evaluate(b, s)).epsilon(1e-15));
  }
}

TEST_CASE("substitution and arity") {
  const Expr f = parse("s^2 + 1", {"s"});
  const Expr g = substitute(f, 0, parse("s - 3", {"s"}));
  CHECK(evaluate(g, 5.0) == 5.0);
  CHECK(variable_arity(parse("u1*u2", {"u1", "u2"})) == 2);
  CHECK(variable_arity(parse("u2", {"u1", "u2"})) == 2);
  CHECK(variable_arity(parse("3", {"u1", "u2"})) == 0);
}

TEST_CASE("parameters bind at parse time") {
  const Expr e = parse("a*s + b", {"s"}, {{"a", 2.0}, {"b", -1.0}});
  CHECK(evaluate(e, 3.0) == 5.0);
  CHECK(to_string(e).find('a') == std::string::npos);
}
