#include "bihilbert/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

namespace bihilbert {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Bicomplexd parse() {
    Bicomplexd v = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Bicomplexd expr() {
    Bicomplexd v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Bicomplexd term() {
    Bicomplexd v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v = v / unary();
      } else {
        return v;
      }
    }
  }

  Bicomplexd unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Bicomplexd power() {
    Bicomplexd v = primary();
    while (accept('^')) {
      const bool negative = accept('-');
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      long n = 0;
      const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, n);
      if (start == pos_ || ec != std::errc() || ptr != src_.data() + pos_) fail("expected an integer exponent");
      v = pow(v, negative ? -n : n);
    }
    return v;
  }

  Bicomplexd number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) ++pos_;
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v)) {
      pos_ = start;
      fail("malformed number '" + text + "'");
    }
    return v;
  }

  Bicomplexd primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept('(')) {
      Bicomplexd v = expr();
      expect(')');
      return v;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");

    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);

    if (name == "i1") return Bicomplexd::i1();
    if (name == "i2") return Bicomplexd::i2();
    if (name == "j") return Bicomplexd::j();
    if (name == "e1") return Bicomplexd::e1();
    if (name == "e2") return Bicomplexd::e2();

    auto call = [this]() {
      expect('(');
      Bicomplexd v = expr();
      expect(')');
      return v;
    };
    if (name == "conj1") return conj(call(), Conjugation::dag1);
    if (name == "conj2") return conj(call(), Conjugation::dag2);
    if (name == "conj3") return conj(call(), Conjugation::dag3);
    if (name == "sqrt") return sqrt(call());

    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Bicomplexd evaluate(std::string_view expr) { return Parser(expr).parse(); }

}  // namespace bihilbert
