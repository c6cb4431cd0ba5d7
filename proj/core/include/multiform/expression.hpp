#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "multiform/errors.hpp"

namespace multiform {

// A compiled arithmetic expression over named variables.  Supports
// + - * / ^, unary minus, parentheses, and sin cos tan sqrt exp log abs.
class Expression {
 public:
  static Expression parse(const std::string& text);
  double eval(const std::map<std::string, double>& vars) const;
  const std::vector<std::string>& variables() const { return vars_; }

  struct Node;
  Expression() = default;

 private:
  std::shared_ptr<const Node> root_;
  std::vector<std::string> vars_;
};

}  // namespace multiform
