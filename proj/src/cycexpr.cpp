#include "goodinv/cycexpr.hpp"

#include <cctype>
#include <stdexcept>

namespace goodinv {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int default_order;

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

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("cyclotomic expression '" + s + "': " + what +
                                " at position " + std::to_string(pos));
  }

  long integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  Cyclotomic atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return Cyclotomic(Rat(integer()));
    if (c == '(') {
      ++pos;
      Cyclotomic v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'i') {
      ++pos;
      return Cyclotomic::root_of_unity(4, 1);
    }
    if (c == 'w') {
      ++pos;
      return Cyclotomic::root_of_unity(3, 1);
    }
    if (c == 'z') {
      ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        return Cyclotomic::root_of_unity(static_cast<int>(integer()), 1);
      return Cyclotomic::root_of_unity(default_order, 1);
    }
    if (s.compare(pos, 4, "sqrt") == 0) {
      pos += 4;
      return Cyclotomic::sqrt_int(integer());
    }
    fail("unexpected character");
  }

  Cyclotomic factor() {
    if (eat('-')) return -factor();
    eat('+');
    Cyclotomic v = atom();
    skip();
    if (eat('^')) {
      bool neg = eat('-');
      long e = integer();
      v = v.pow(neg ? -e : e);
    }
    return v;
  }

  Cyclotomic term() {
    Cyclotomic v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        v = v / factor();
      } else {
        return v;
      }
    }
  }

  Cyclotomic expr() {
    Cyclotomic v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }
};

}  // namespace

Cyclotomic parse_cyclotomic(const std::string& text, int default_order) {
  Parser p{text, 0, default_order};
  Cyclotomic v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace goodinv
