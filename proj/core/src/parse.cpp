#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "monadica/error.hpp"
#include "monadica/expr.hpp"

namespace monadica::calc {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expression() {
    Expr e = term();
    for (;;) {
      if (accept('+')) {
        e = e + term();
      } else if (accept('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        e = e / unary();
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    Expr exponent = unary();
    if (!exponent.is_constant()) {
      if (base.is_constant() && base.value() > 0.0) {
        return exp(exponent * Expr::constant(std::log(base.value())));
      }
      fail("exponent must be a constant");
    }
    const double k = exponent.value();
    if (k == std::floor(k) && std::abs(k) <= 1024.0) {
      const auto m = static_cast<std::uint32_t>(std::abs(k));
      return k >= 0.0 ? pow_int(base, m) : Expr::constant(1.0) / pow_int(base, m);
    }
    return pow_real(base, k);
  }

  double number() {
    skip_ws();
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t order_argument() {
    const double m = number();
    if (m != std::floor(m) || m < 2.0 || m > 1024.0) fail("root order must be an integer >= 2");
    return static_cast<std::uint32_t>(m);
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Expr::constant(number());
    const std::string id = identifier();
    if (id.empty()) fail("unexpected '" + std::string(1, c) + "'");
    if (id == "x") return Expr::variable();
    if (id == "pi") return Expr::constant(std::numbers::pi);
    if (id == "e") return Expr::constant(std::numbers::e);
    expect('(');
    Expr result;
    if (id == "root") {
      const std::uint32_t m = order_argument();
      expect(',');
      result = root(expression(), m);
    } else if (id == "pow") {
      Expr alpha = expression();
      if (!alpha.is_constant()) fail("pow exponent must be a constant");
      expect(',');
      result = pow_real(expression(), alpha.value());
    } else {
      Expr arg = expression();
      if (id == "exp") {
        result = exp(arg);
      } else if (id == "log" || id == "ln") {
        result = log(arg);
      } else if (id == "sin") {
        result = sin(arg);
      } else if (id == "cos") {
        result = cos(arg);
      } else if (id == "sqrt") {
        result = root(arg, 2);
      } else {
        fail("unknown function '" + id + "'");
      }
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace monadica::calc
