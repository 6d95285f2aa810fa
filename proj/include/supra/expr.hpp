#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supra::expr {

// Parse failure with a 1-based source column, so CLI users can point at the
// offending character.
struct parse_error : std::runtime_error {
  std::size_t column;
  parse_error(const std::string& msg, std::size_t col)
      : std::runtime_error(msg + " (column " + std::to_string(col) + ")"), column(col) {}
};

namespace detail {

enum class Op { constant, variable, neg, add, sub, mul, div, exp, abs };

struct Node {
  Op op;
  double value = 0.0;
  std::unique_ptr<Node> lhs, rhs;
};

inline double eval_node(const Node& n, double x) {
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::variable: return x;
    case Op::neg: return -eval_node(*n.lhs, x);
    case Op::add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
    case Op::sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
    case Op::mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
    case Op::div: return eval_node(*n.lhs, x) / eval_node(*n.rhs, x);
    case Op::exp: return std::exp(eval_node(*n.lhs, x));
    case Op::abs: return std::abs(eval_node(*n.lhs, x));
  }
  throw std::logic_error("eval_node: unreachable");
}

struct Token {
  enum class Kind { number, ident, plus, minus, star, slash, lparen, rparen, end } kind;
  double number = 0.0;
  std::string ident;
  std::size_t column = 0;  // 1-based
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto col = [&](std::size_t at) { return at + 1; };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          ++k;
          while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(src.data() + start, src.data() + j, v);
      if (ec != std::errc{} || ptr != src.data() + j)
        throw parse_error("malformed number '" + src.substr(start, j - start) + "'", col(start));
      out.push_back({Token::Kind::number, v, "", col(start)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Token::Kind::ident, 0.0, src.substr(start, j - start), col(start)});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::plus; break;
      case '-': k = Token::Kind::minus; break;
      case '*': k = Token::Kind::star; break;
      case '/': k = Token::Kind::slash; break;
      case '(': k = Token::Kind::lparen; break;
      case ')': k = Token::Kind::rparen; break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", col(start));
    }
    out.push_back({k, 0.0, "", col(start)});
    ++i;
  }
  out.push_back({Token::Kind::end, 0.0, "", col(src.size())});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::unique_ptr<Node> run() {
    auto root = expression();
    if (peek().kind != Token::Kind::end)
      throw parse_error("unexpected trailing input", peek().column);
    return root;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  static std::unique_ptr<Node> make(Op op, std::unique_ptr<Node> l = nullptr,
                                    std::unique_ptr<Node> r = nullptr) {
    auto n = std::make_unique<Node>();
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  std::unique_ptr<Node> expression() {
    auto lhs = term();
    while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
      const bool plus = take().kind == Token::Kind::plus;
      lhs = make(plus ? Op::add : Op::sub, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<Node> term() {
    auto lhs = unary();
    while (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
      const bool mul = take().kind == Token::Kind::star;
      lhs = make(mul ? Op::mul : Op::div, std::move(lhs), unary());
    }
    return lhs;
  }

  std::unique_ptr<Node> unary() {
    if (peek().kind == Token::Kind::minus) {
      take();
      return make(Op::neg, unary());
    }
    if (peek().kind == Token::Kind::plus) {
      take();
      return unary();
    }
    return primary();
  }

  std::unique_ptr<Node> primary() {
    const Token t = take();
    switch (t.kind) {
      case Token::Kind::number: {
        auto n = make(Op::constant);
        n->value = t.number;
        return n;
      }
      case Token::Kind::ident: {
        if (t.ident == "x") return make(Op::variable);
        if (t.ident == "exp" || t.ident == "abs") {
          if (peek().kind != Token::Kind::lparen)
            throw parse_error("expected '(' after '" + t.ident + "'", peek().column);
          take();
          auto arg = expression();
          if (peek().kind != Token::Kind::rparen)
            throw parse_error("expected ')'", peek().column);
          take();
          return make(t.ident == "exp" ? Op::exp : Op::abs, std::move(arg));
        }
        throw parse_error("unknown identifier '" + t.ident + "'", t.column);
      }
      case Token::Kind::lparen: {
        auto inner = expression();
        if (peek().kind != Token::Kind::rparen)
          throw parse_error("expected ')'", peek().column);
        take();
        return inner;
      }
      case Token::Kind::rparen:
        throw parse_error("unexpected ')'", t.column);
      case Token::Kind::plus:
        throw parse_error("unexpected '+'", t.column);
      case Token::Kind::minus:
        throw parse_error("unexpected '-'", t.column);
      case Token::Kind::star:
        throw parse_error("unexpected '*'", t.column);
      case Token::Kind::slash:
        throw parse_error("unexpected '/'", t.column);
      case Token::Kind::end:
        throw parse_error("unexpected end of input", t.column);
    }
    throw std::logic_error("primary: unreachable");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// A parsed scalar expression over the single variable x, with +, -, *, /,
// parentheses, exp, abs, and numeric literals.  Copyable (the tree is shared)
// so it slots into std::function.
class Expr {
 public:
  double operator()(double x) const { return detail::eval_node(*root_, x); }
  const std::string& source() const { return src_; }

  friend Expr parse(const std::string& src);

 private:
  std::shared_ptr<const detail::Node> root_;
  std::string src_;
};

inline Expr parse(const std::string& src) {
  Expr e;
  e.root_ = detail::Parser(detail::lex(src)).run();
  e.src_ = src;
  return e;
}

inline std::function<double(double)> compile(const std::string& src) { return parse(src); }

}  // namespace supra::expr
