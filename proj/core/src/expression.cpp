#include "yangcheck/expression.hpp"

#include <cctype>
#include <charconv>

namespace yc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::unique_ptr<Expr> run() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static std::unique_ptr<Expr> node(Expr::Kind k, size_t at) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = at;
    return e;
  }
  static std::unique_ptr<Expr> binary(Expr::Kind k, size_t at, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b) {
    auto e = node(k, at);
    e->args.push_back(std::move(a));
    e->args.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    for (;;) {
      skip();
      size_t at = pos_;
      if (accept('+')) lhs = binary(Expr::Kind::add, at, std::move(lhs), term());
      else if (accept('-')) lhs = binary(Expr::Kind::sub, at, std::move(lhs), term());
      else return lhs;
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    for (;;) {
      skip();
      size_t at = pos_;
      if (accept('*')) lhs = binary(Expr::Kind::mul, at, std::move(lhs), unary());
      else if (accept('/')) lhs = binary(Expr::Kind::div, at, std::move(lhs), unary());
      else return lhs;
    }
  }

  std::unique_ptr<Expr> unary() {
    skip();
    size_t at = pos_;
    if (accept('-')) {
      auto e = node(Expr::Kind::neg, at);
      e->args.push_back(unary());
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    skip();
    size_t at = pos_;
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected integer exponent");
    long value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc() || value > 1000) throw ParseError(start, "exponent too large");
    auto e = node(Expr::Kind::pow, at);
    e->exponent = negative ? -value : value;
    e->args.push_back(std::move(base));
    return e;
  }

  std::unique_ptr<Expr> atom() {
    skip();
    size_t at = pos_;
    if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (accept('(')) {
      auto e = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto e = node(Expr::Kind::integer, at);
      e->text = std::string(s_.substr(at, pos_ - at));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto e = node(Expr::Kind::identifier, at);
      e->text = std::string(s_.substr(at, pos_ - at));
      return e;
    }
    throw ParseError(at, std::string("unexpected '") + c + "'");
  }
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view input) { return Parser(input).run(); }

RationalFunction evaluate_rational(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer: return RationalFunction(mpq_class(mpz_class(e.text)));
    case Expr::Kind::identifier: {
      auto v = Var::parse(e.text);
      if (!v) throw ParseError(e.position, "unknown variable '" + e.text + "'");
      return RationalFunction(*v);
    }
    case Expr::Kind::neg: return -evaluate_rational(*e.args[0]);
    case Expr::Kind::pow: {
      RationalFunction b = evaluate_rational(*e.args[0]);
      if (e.exponent < 0 && b.is_zero()) throw ParseError(e.position, "division by zero");
      return b.pow(static_cast<int>(e.exponent));
    }
    default: break;
  }
  RationalFunction a = evaluate_rational(*e.args[0]);
  RationalFunction b = evaluate_rational(*e.args[1]);
  switch (e.kind) {
    case Expr::Kind::add: return a + b;
    case Expr::Kind::sub: return a - b;
    case Expr::Kind::mul: return a * b;
    default:
      if (b.is_zero()) throw ParseError(e.position, "division by zero");
      return a / b;
  }
}

RationalFunction parse_rational(std::string_view input) { return evaluate_rational(*parse_expression(input)); }

Polynomial parse_polynomial(std::string_view input) {
  RationalFunction f = parse_rational(input);
  if (!f.is_polynomial()) throw ParseError(0, "expected a polynomial");
  return f.numerator();
}

}  // namespace yc
