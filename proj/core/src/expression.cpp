#include "multiform/expression.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <set>

namespace multiform {

struct Expression::Node {
  enum class Kind { Number, Variable, Unary, Binary, Call } kind;
  double value = 0.0;
  std::string name;
  char op = 0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (eat('+')) {
        lhs = binary('+', lhs, term());
      } else if (eat('-')) {
        lhs = binary('-', lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      if (eat('*')) {
        lhs = binary('*', lhs, factor());
      } else if (eat('/')) {
        lhs = binary('/', lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    NodePtr base = unary();
    if (eat('^')) return binary('^', base, factor());  // right associative
    return base;
  }

  NodePtr unary() {
    if (eat('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Unary;
      n->op = '-';
      n->lhs = unary();
      return n;
    }
    if (eat('+')) return unary();
    return primary();
  }

  NodePtr primary() {
    skip();
    if (pos >= s.size()) throw ConfigError("unexpected end of expression: " + s);
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      double v = std::stod(s.substr(pos), &used);
      pos += used;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Number;
      n->value = v;
      return n;
    }
    if (c == '(') {
      ++pos;
      NodePtr inner = expr();
      if (!eat(')')) throw ConfigError("missing ')' in expression: " + s);
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (peek() == '(') {
        eat('(');
        NodePtr arg = expr();
        if (!eat(')')) throw ConfigError("missing ')' after call in: " + s);
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Call;
        n->name = name;
        n->lhs = arg;
        return n;
      }
      if (name == "pi") {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Number;
        n->value = M_PI;
        return n;
      }
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Variable;
      n->name = name;
      return n;
    }
    throw ConfigError("bad character '" + std::string(1, c) + "' in expression: " + s);
  }

  NodePtr binary(char op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }
};

double eval_node(const Node& n, const std::map<std::string, double>& vars) {
  switch (n.kind) {
    case Node::Kind::Number: return n.value;
    case Node::Kind::Variable: {
      auto it = vars.find(n.name);
      if (it == vars.end()) throw ConfigError("unknown variable: " + n.name);
      return it->second;
    }
    case Node::Kind::Unary: return -eval_node(*n.lhs, vars);
    case Node::Kind::Binary: {
      double a = eval_node(*n.lhs, vars), b = eval_node(*n.rhs, vars);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^': return std::pow(a, b);
      }
      throw ConfigError("bad operator");
    }
    case Node::Kind::Call: {
      double a = eval_node(*n.lhs, vars);
      if (n.name == "sin") return std::sin(a);
      if (n.name == "cos") return std::cos(a);
      if (n.name == "tan") return std::tan(a);
      if (n.name == "sqrt") return std::sqrt(a);
      if (n.name == "exp") return std::exp(a);
      if (n.name == "log") return std::log(a);
      if (n.name == "abs") return std::abs(a);
      throw ConfigError("unknown function: " + n.name);
    }
  }
  throw ConfigError("bad expression node");
}

void collect_vars(const Node& n, std::set<std::string>& out) {
  if (n.kind == Node::Kind::Variable) out.insert(n.name);
  if (n.lhs) collect_vars(*n.lhs, out);
  if (n.rhs) collect_vars(*n.rhs, out);
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Parser p{text};
  Expression e;
  e.root_ = p.expr();
  p.skip();
  if (p.pos != text.size())
    throw ConfigError("trailing characters in expression: " + text);
  std::set<std::string> vars;
  collect_vars(*e.root_, vars);
  e.vars_.assign(vars.begin(), vars.end());
  return e;
}

double Expression::eval(const std::map<std::string, double>& vars) const {
  if (!root_) throw ConfigError("empty expression");
  return eval_node(*root_, vars);
}

}  // namespace multiform
