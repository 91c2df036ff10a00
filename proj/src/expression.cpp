#include "slzeta/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace slzeta::expr {

namespace {

std::string describe(std::size_t offset, const std::string& message,
                     const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << "at offset " << offset << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

Node leaf(Node::Kind kind, double value = 0.0) {
  Node n;
  n.kind = kind;
  n.value = value;
  return n;
}

Node branch(Node::Kind kind, Node lhs) {
  Node n;
  n.kind = kind;
  n.children.push_back(std::move(lhs));
  return n;
}

Node branch(Node::Kind kind, Node lhs, Node rhs) {
  Node n = branch(kind, std::move(lhs));
  n.children.push_back(std::move(rhs));
  return n;
}

const std::vector<std::string> kOperand = {"a number", "'x'", "'pi'",
                                           "a function", "'('", "'-'"};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node out = expression();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'",
                       {"an operator", "end of input"});
    }
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Node expression() {
    Node lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = branch(Node::Kind::add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = branch(Node::Kind::sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Node term() {
    Node lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = branch(Node::Kind::mul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = branch(Node::Kind::div, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Node unary() {
    if (accept('-')) return branch(Node::Kind::negate, unary());
    return power();
  }

  Node power() {
    Node base = primary();
    if (accept('^')) return branch(Node::Kind::pow, std::move(base), unary());
    return base;
  }

  Node primary() {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError(pos_, "unexpected end of input", kOperand);
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return named();
    if (accept('(')) {
      Node inner = expression();
      expect_close();
      return inner;
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'", kOperand);
  }

  Node number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++count;
      }
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError(start, "malformed number", {"a digit"});
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        ++pos_;
      }
      if (digits() == 0) {
        throw ParseError(pos_, "malformed exponent", {"a digit"});
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      throw ParseError(start, "number out of range '" +
                                  std::string(text_.substr(start, pos_ - start)) +
                                  "'");
    }
    return leaf(Node::Kind::number, value);
  }

  Node named() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "x") return leaf(Node::Kind::variable);
    if (name == "pi") return leaf(Node::Kind::pi);
    Node::Kind kind;
    if (name == "sin") {
      kind = Node::Kind::sin;
    } else if (name == "cos") {
      kind = Node::Kind::cos;
    } else if (name == "exp") {
      kind = Node::Kind::exp;
    } else if (name == "sqrt") {
      kind = Node::Kind::sqrt;
    } else {
      throw UnknownIdentifier(start, name);
    }
    if (!accept('(')) {
      throw ParseError(pos_, "function '" + name + "' needs an argument",
                       {"'('"});
    }
    Node arg = expression();
    expect_close();
    return branch(kind, std::move(arg));
  }

  void expect_close() {
    if (!accept(')')) {
      skip_space();
      throw ParseError(pos_,
                       pos_ < text_.size()
                           ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                           : "unexpected end of input",
                       {"')'", "an operator"});
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength, matching the grammar levels.
int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::add:
    case Node::Kind::sub:
      return 1;
    case Node::Kind::mul:
    case Node::Kind::div:
      return 2;
    case Node::Kind::negate:
      return 3;
    case Node::Kind::pow:
      return 4;
    default:
      return 5;
  }
}

void write(const Node& n, std::string& out);

void write_wrapped(const Node& n, bool parens, std::string& out) {
  if (parens) out += '(';
  write(n, out);
  if (parens) out += ')';
}

void write(const Node& n, std::string& out) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::number: {
      char buf[32];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, n.value);
      out.append(buf, ptr);
      return;
    }
    case K::variable:
      out += 'x';
      return;
    case K::pi:
      out += "pi";
      return;
    case K::negate:
      out += '-';
      write_wrapped(n.children[0], precedence(n.children[0]) < 3, out);
      return;
    case K::sin:
    case K::cos:
    case K::exp:
    case K::sqrt: {
      static constexpr const char* names[] = {"sin", "cos", "exp", "sqrt"};
      out += names[static_cast<int>(n.kind) - static_cast<int>(K::sin)];
      write_wrapped(n.children[0], true, out);
      return;
    }
    case K::pow:
      write_wrapped(n.children[0], precedence(n.children[0]) <= 4, out);
      out += '^';
      write_wrapped(n.children[1], precedence(n.children[1]) < 3, out);
      return;
    default: {
      const int prec = precedence(n);
      static constexpr const char* ops[] = {" + ", " - ", " * ", " / "};
      write_wrapped(n.children[0], precedence(n.children[0]) < prec, out);
      out += ops[static_cast<int>(n.kind) - static_cast<int>(K::add)];
      write_wrapped(n.children[1], precedence(n.children[1]) <= prec, out);
      return;
    }
  }
}

bool mentions_x(const Node& n) {
  if (n.kind == Node::Kind::variable) return true;
  for (const Node& c : n.children) {
    if (mentions_x(c)) return true;
  }
  return false;
}

}  // namespace

ParseError::ParseError(std::size_t offset, const std::string& message,
                       std::vector<std::string> expected)
    : std::invalid_argument(describe(offset, message, expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::size_t offset, const std::string& name)
    : ParseError(offset, "unknown identifier '" + name + "'",
                 {"'x'", "'pi'", "sin", "cos", "exp", "sqrt"}),
      name_(name) {}

Expression::Expression()
    : source_("0"), root_(std::make_shared<const Node>()) {}

Expression::Expression(std::string source, Node root)
    : source_(std::move(source)),
      root_(std::make_shared<const Node>(std::move(root))) {}

Expression parse_expression(std::string_view source) {
  return Expression(std::string(source), Parser(source).parse());
}

double Expression::operator()(double x) const { return evaluate(*root_, x); }

bool Expression::depends_on_x() const { return mentions_x(*root_); }

std::string Expression::unparse() const { return expr::unparse(*root_); }

std::string unparse(const Node& node) {
  std::string out;
  write(node, out);
  return out;
}

double evaluate(const Node& n, double x) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::number:
      return n.value;
    case K::variable:
      return x;
    case K::pi:
      return std::numbers::pi;
    case K::negate:
      return -evaluate(n.children[0], x);
    case K::add:
      return evaluate(n.children[0], x) + evaluate(n.children[1], x);
    case K::sub:
      return evaluate(n.children[0], x) - evaluate(n.children[1], x);
    case K::mul:
      return evaluate(n.children[0], x) * evaluate(n.children[1], x);
    case K::div:
      return evaluate(n.children[0], x) / evaluate(n.children[1], x);
    case K::pow:
      return std::pow(evaluate(n.children[0], x), evaluate(n.children[1], x));
    case K::sin:
      return std::sin(evaluate(n.children[0], x));
    case K::cos:
      return std::cos(evaluate(n.children[0], x));
    case K::exp:
      return std::exp(evaluate(n.children[0], x));
    case K::sqrt:
      return std::sqrt(evaluate(n.children[0], x));
  }
  return 0.0;
}

}  // namespace slzeta::expr
