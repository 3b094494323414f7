#pragma once

// Closed-form coordinate functions: a small recursive-descent parser and an
// evaluator templated on the number type (double, Jet, Jet2).

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g3/error.hpp"
#include "g3/jet.hpp"

namespace g3 {

using ParamMap = std::map<std::string, double>;

enum class NodeKind { Number, Variable, Parameter, Negate, Add, Sub, Mul, Div, Pow, Call };

struct Node {
  NodeKind kind = NodeKind::Number;
  double value = 0.0;         // Number literal, or the bound Parameter value
  int variable = -1;          // Variable slot
  Func func = Func::Sin;      // Call
  std::string name;           // Variable / Parameter / constant name, for printing
  std::size_t offset = 0;     // byte offset in the source
  std::vector<std::shared_ptr<const Node>> children;
};

/// Immutable expression tree. Copies share structure.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }
  bool empty() const { return root_ == nullptr; }
  const std::shared_ptr<const Node>& node() const { return root_; }

 private:
  std::shared_ptr<const Node> root_;
};

/// Parses `source`. Variables are bound to evaluation slots in the order given;
/// parameters are bound to their values at parse time. `pi` and `e` are
/// constants. Throws Error(Syntax | UnknownIdentifier | Arity | Precondition).
Expr parse(std::string_view source, const std::vector<std::string>& variables, const ParamMap& parameters = {});

/// Canonical text form; re-parses to an equivalent tree.
std::string to_string(const Expr& expr);

/// Number of variable slots referenced (1 + highest slot, 0 for constants).
int variable_arity(const Expr& expr);

// Builders for programmatic construction (surfaces of revolution, motions).
namespace build {
Expr number(double v);
Expr variable(int slot, std::string name);
Expr negate(const Expr& a);
Expr add(const Expr& a, const Expr& b);
Expr sub(const Expr& a, const Expr& b);
Expr mul(const Expr& a, const Expr& b);
Expr div(const Expr& a, const Expr& b);
Expr pow(const Expr& a, const Expr& b);
Expr call(Func fn, const Expr& a);
}  // namespace build

/// Replaces every reference to variable `slot` by `replacement`.
Expr substitute(const Expr& expr, int slot, const Expr& replacement);

/// Evaluates with the given variable values. Throws Error(Domain) carrying the
/// byte offset of the offending node.
template <typename T>
T evaluate(const Expr& expr, std::span<const T> variables);

extern template double evaluate<double>(const Expr&, std::span<const double>);
extern template Jet evaluate<Jet>(const Expr&, std::span<const Jet>);
extern template Jet2 evaluate<Jet2>(const Expr&, std::span<const Jet2>);

inline double evaluate(const Expr& expr, double s) { return evaluate<double>(expr, std::span<const double>(&s, 1)); }

/// Value and derivatives up to `order` (0..3) in the single variable.
Jet eval_jet(const Expr& expr, double at, int order);

/// Value, gradient and Hessian in the two variables.
Jet2 eval_jet2(const Expr& expr, double u1, double u2);

}  // namespace g3
