#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Coefficient expressions in one variable x.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'x' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | exp | sqrt
//
// so ^ binds tighter than unary minus: -2^2 = -4, 2^3^2 = 512, 2^-1 = 0.5.
namespace slzeta::expr {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& message,
             std::vector<std::string> expected = {});

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(std::size_t offset, const std::string& name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct Node {
  enum class Kind {
    number,
    variable,
    pi,
    negate,
    add,
    sub,
    mul,
    div,
    pow,
    sin,
    cos,
    exp,
    sqrt,
  };

  Kind kind = Kind::number;
  double value = 0.0;  // number literals only
  std::vector<Node> children;

  friend bool operator==(const Node&, const Node&) = default;
};

class Expression {
 public:
  Expression();  // the constant 0

  const std::string& source() const noexcept { return source_; }
  const Node& root() const noexcept { return *root_; }

  double operator()(double x) const;

  /// Whether the expression mentions x.
  bool depends_on_x() const;

  /// Text that parses back to the same tree, with minimal parentheses.
  std::string unparse() const;

  friend Expression parse_expression(std::string_view source);

 private:
  Expression(std::string source, Node root);

  std::string source_;
  std::shared_ptr<const Node> root_;
};

Expression parse_expression(std::string_view source);

double evaluate(const Node& node, double x);
std::string unparse(const Node& node);

}  // namespace slzeta::expr
