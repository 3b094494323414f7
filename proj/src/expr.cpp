#include "g3/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>

namespace g3 {

namespace {

struct FuncName {
  const char* name;
  Func func;
};

constexpr FuncName kFunctions[] = {
    {"sin", Func::Sin},   {"cos", Func::Cos},   {"tan", Func::Tan},   {"exp", Func::Exp}, {"log", Func::Log},
    {"sqrt", Func::Sqrt}, {"sinh", Func::Sinh}, {"cosh", Func::Cosh}, {"abs", Func::Abs},
};

std::optional<Func> lookup_function(std::string_view name) {
  for (const auto& f : kFunctions)
    if (name == f.name) return f.func;
  return std::nullopt;
}

const char* function_name(Func fn) {
  for (const auto& f : kFunctions)
    if (f.func == fn) return f.name;
  return "?";
}

std::shared_ptr<Node> make(NodeKind kind, std::size_t offset) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->offset = offset;
  return n;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars, const ParamMap& params)
      : src_(src), vars_(vars), params_(params) {}

  Expr run() {
    skip_space();
    if (pos_ == src_.size()) throw Error(ErrorCode::Syntax, "empty expression", 0);
    auto root = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return Expr(std::move(root));
  }

 private:
  using Ptr = std::shared_ptr<const Node>;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Syntax, what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Ptr binary(NodeKind kind, Ptr lhs, Ptr rhs, std::size_t offset) {
    auto n = make(kind, offset);
    n->children = {std::move(lhs), std::move(rhs)};
    return n;
  }

  Ptr expr() {
    auto lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(NodeKind::Add, lhs, term(), at);
      } else if (accept('-')) {
        lhs = binary(NodeKind::Sub, lhs, term(), at);
      } else {
        return lhs;
      }
    }
  }

  Ptr term() {
    auto lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(NodeKind::Mul, lhs, unary(), at);
      } else if (accept('/')) {
        lhs = binary(NodeKind::Div, lhs, unary(), at);
      } else {
        return lhs;
      }
    }
  }

  Ptr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      auto n = make(NodeKind::Negate, at);
      n->children = {unary()};
      return n;
    }
    return power();
  }

  // '^' binds tighter than unary minus and is right-associative; the exponent
  // may itself carry a sign.
  Ptr power() {
    auto base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) return binary(NodeKind::Pow, base, unary(), at);
    return base;
  }

  Ptr primary() {
    skip_space();
    if (pos_ == src_.size()) fail("unexpected end of expression");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Ptr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t count = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      count += digits();
    }
    if (count == 0) fail("malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    auto n = make(NodeKind::Number, start);
    n->value = std::stod(std::string(src_.substr(start, pos_ - start)));
    return n;
  }

  Ptr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    skip_space();
    const bool call = pos_ < src_.size() && src_[pos_] == '(';

    if (auto fn = lookup_function(name)) {
      if (!call) {
        pos_ = start + name.size();
        fail("function '" + name + "' requires an argument list");
      }
      ++pos_;
      std::vector<Ptr> args;
      if (!accept(')')) {
        do {
          args.push_back(expr());
        } while (accept(','));
        if (!accept(')')) fail("expected ')'");
      }
      if (args.size() != 1) {
        throw Error(ErrorCode::Arity,
                    "function '" + name + "' takes 1 argument, got " + std::to_string(args.size()) + " at offset " +
                        std::to_string(start),
                    start);
      }
      auto n = make(NodeKind::Call, start);
      n->func = *fn;
      n->name = name;
      n->children = std::move(args);
      return n;
    }

    const auto var = std::find(vars_.begin(), vars_.end(), name);
    const bool known = var != vars_.end() || params_.count(name) || name == "pi" || name == "e";
    if (!known) {
      throw Error(ErrorCode::UnknownIdentifier,
                  "unknown identifier '" + name + "' at offset " + std::to_string(start), start);
    }
    if (call) fail("'" + name + "' is not a function (implicit multiplication is not supported)");

    if (var != vars_.end()) {
      auto n = make(NodeKind::Variable, start);
      n->variable = static_cast<int>(var - vars_.begin());
      n->name = name;
      return n;
    }
    if (auto it = params_.find(name); it != params_.end()) {
      auto n = make(NodeKind::Parameter, start);
      n->value = it->second;
      n->name = name;
      return n;
    }
    auto n = make(NodeKind::Number, start);
    n->value = name == "pi" ? std::numbers::pi : std::numbers::e;
    n->name = name;
    return n;
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

void check_names(const std::vector<std::string>& variables, const ParamMap& parameters) {
  std::set<std::string> seen;
  auto reserved = [](const std::string& n) { return n == "pi" || n == "e" || lookup_function(n).has_value(); };
  for (const auto& v : variables) {
    if (reserved(v)) throw Error(ErrorCode::Precondition, "variable name '" + v + "' is reserved");
    if (!seen.insert(v).second) throw Error(ErrorCode::Precondition, "duplicate variable '" + v + "'");
  }
  for (const auto& [p, value] : parameters) {
    if (reserved(p)) throw Error(ErrorCode::Precondition, "parameter name '" + p + "' is reserved");
    if (seen.count(p)) throw Error(ErrorCode::Precondition, "'" + p + "' is both a variable and a parameter");
  }
}

// -- printing ---------------------------------------------------------------

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Negate: return 3;
    case NodeKind::Pow: return 4;
    case NodeKind::Number:
    case NodeKind::Parameter: return (n.name.empty() || n.kind == NodeKind::Parameter) && n.value < 0 ? 3 : 5;
    default: return 5;
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print(const Node& n, std::string& out) {
  auto child = [&](const Node& c, bool wrap) {
    if (wrap) out += '(';
    print(c, out);
    if (wrap) out += ')';
  };
  const int p = precedence(n);
  switch (n.kind) {
    case NodeKind::Number:
      out += n.name.empty() ? format_number(n.value) : n.name;
      return;
    case NodeKind::Parameter: out += format_number(n.value); return;
    case NodeKind::Variable: out += n.name; return;
    case NodeKind::Negate:
      out += '-';
      child(*n.children[0], precedence(*n.children[0]) < 3);
      return;
    case NodeKind::Call:
      out += function_name(n.func);
      out += '(';
      print(*n.children[0], out);
      out += ')';
      return;
    case NodeKind::Pow:
      child(*n.children[0], precedence(*n.children[0]) <= 4);
      out += '^';
      child(*n.children[1], precedence(*n.children[1]) < 3);
      return;
    default: {
      const char* op = n.kind == NodeKind::Add ? " + " : n.kind == NodeKind::Sub ? " - " : n.kind == NodeKind::Mul ? "*" : "/";
      child(*n.children[0], precedence(*n.children[0]) < p);
      out += op;
      child(*n.children[1], precedence(*n.children[1]) <= p);
      return;
    }
  }
}

int arity(const Node& n) {
  int a = n.kind == NodeKind::Variable ? n.variable + 1 : 0;
  for (const auto& c : n.children) a = std::max(a, arity(*c));
  return a;
}

std::shared_ptr<const Node> substitute_node(const std::shared_ptr<const Node>& n, int slot,
                                            const std::shared_ptr<const Node>& replacement) {
  if (n->kind == NodeKind::Variable) return n->variable == slot ? replacement : n;
  if (n->children.empty()) return n;
  auto copy = std::make_shared<Node>(*n);
  for (auto& c : copy->children) c = substitute_node(c, slot, replacement);
  return copy;
}

// -- evaluation -------------------------------------------------------------

template <typename T>
T eval_node(const Node& n, std::span<const T> vars) {
  auto located = [&](auto&& fn) -> T {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Domain || e.offset() != Error::npos) throw;
      throw Error(ErrorCode::Domain, std::string(e.what()) + " at offset " + std::to_string(n.offset), n.offset);
    }
  };

  switch (n.kind) {
    case NodeKind::Number:
    case NodeKind::Parameter: return T(n.value);
    case NodeKind::Variable:
      if (n.variable < 0 || static_cast<std::size_t>(n.variable) >= vars.size())
        throw Error(ErrorCode::Precondition, "variable '" + n.name + "' has no value", n.offset);
      return vars[static_cast<std::size_t>(n.variable)];
    case NodeKind::Negate: return -eval_node(*n.children[0], vars);
    case NodeKind::Add: return eval_node(*n.children[0], vars) + eval_node(*n.children[1], vars);
    case NodeKind::Sub: return eval_node(*n.children[0], vars) - eval_node(*n.children[1], vars);
    case NodeKind::Mul: return eval_node(*n.children[0], vars) * eval_node(*n.children[1], vars);
    case NodeKind::Div: {
      const T a = eval_node(*n.children[0], vars);
      const T b = eval_node(*n.children[1], vars);
      return located([&]() -> T {
        if (value_of(b) == 0.0) throw Error(ErrorCode::Domain, "division by zero");
        if constexpr (std::is_same_v<T, double>) {
          return a / b;
        } else {
          return a * lift(b, reciprocal_derivatives(value_of(b), order_of(b)));
        }
      });
    }
    case NodeKind::Pow: {
      const T base = eval_node(*n.children[0], vars);
      const T exponent = eval_node(*n.children[1], vars);
      return located([&]() -> T {
        if (is_constant(exponent)) return lift(base, power_derivatives(value_of(base), value_of(exponent), order_of(base)));
        if (value_of(base) <= 0.0) throw Error(ErrorCode::Domain, "variable exponent needs a positive base");
        const T logged = lift(base, function_derivatives(Func::Log, value_of(base), order_of(base)));
        const T product = exponent * logged;
        return lift(product, function_derivatives(Func::Exp, value_of(product), order_of(product)));
      });
    }
    case NodeKind::Call: {
      const T x = eval_node(*n.children[0], vars);
      return located([&]() -> T { return lift(x, function_derivatives(n.func, value_of(x), order_of(x))); });
    }
  }
  throw Error(ErrorCode::Precondition, "corrupt expression tree");
}

}  // namespace

Expr parse(std::string_view source, const std::vector<std::string>& variables, const ParamMap& parameters) {
  check_names(variables, parameters);
  return Parser(source, variables, parameters).run();
}

std::string to_string(const Expr& expr) {
  std::string out;
  if (!expr.empty()) print(expr.root(), out);
  return out;
}

int variable_arity(const Expr& expr) { return expr.empty() ? 0 : arity(expr.root()); }

namespace build {

Expr number(double v) {
  auto n = make(NodeKind::Number, 0);
  n->value = v;
  return Expr(std::move(n));
}

Expr variable(int slot, std::string name) {
  auto n = make(NodeKind::Variable, 0);
  n->variable = slot;
  n->name = std::move(name);
  return Expr(std::move(n));
}

namespace {
Expr node(NodeKind kind, std::initializer_list<Expr> children) {
  auto n = make(kind, 0);
  for (const auto& c : children) n->children.push_back(c.node());
  return Expr(std::move(n));
}
}  // namespace

Expr negate(const Expr& a) { return node(NodeKind::Negate, {a}); }
Expr add(const Expr& a, const Expr& b) { return node(NodeKind::Add, {a, b}); }
Expr sub(const Expr& a, const Expr& b) { return node(NodeKind::Sub, {a, b}); }
Expr mul(const Expr& a, const Expr& b) { return node(NodeKind::Mul, {a, b}); }
Expr div(const Expr& a, const Expr& b) { return node(NodeKind::Div, {a, b}); }
Expr pow(const Expr& a, const Expr& b) { return node(NodeKind::Pow, {a, b}); }

Expr call(Func fn, const Expr& a) {
  auto n = make(NodeKind::Call, 0);
  n->func = fn;
  n->name = function_name(fn);
  n->children = {a.node()};
  return Expr(std::move(n));
}

}  // namespace build

Expr substitute(const Expr& expr, int slot, const Expr& replacement) {
  return Expr(substitute_node(expr.node(), slot, replacement.node()));
}

template <typename T>
T evaluate(const Expr& expr, std::span<const T> variables) {
  return eval_node<T>(expr.root(), variables);
}

template double evaluate<double>(const Expr&, std::span<const double>);
template Jet evaluate<Jet>(const Expr&, std::span<const Jet>);
template Jet2 evaluate<Jet2>(const Expr&, std::span<const Jet2>);

Jet eval_jet(const Expr& expr, double at, int order) {
  if (order < 0 || order > 3) throw Error(ErrorCode::Precondition, "jet order must be 0..3");
  if (variable_arity(expr) > 1) throw Error(ErrorCode::Precondition, "expression uses more than one variable");
  const Jet seed = Jet::variable(at, order);
  return evaluate<Jet>(expr, std::span<const Jet>(&seed, 1));
}

Jet2 eval_jet2(const Expr& expr, double u1, double u2) {
  if (variable_arity(expr) > 2) throw Error(ErrorCode::Precondition, "expression uses more than two variables");
  const Jet2 seeds[2] = {Jet2::variable(0, u1), Jet2::variable(1, u2)};
  return evaluate<Jet2>(expr, std::span<const Jet2>(seeds, 2));
}

}  // namespace g3
