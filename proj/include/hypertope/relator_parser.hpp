#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace hypertope {

// Relator expression grammar:
//
//   expression := term { ['*'] term }
//   term       := atom { '^' exponent }
//   exponent   := ['-'] integer | atom           (power, or conjugation x^y)
//   atom       := name | '1' | '(' expression ')' | '[' expression ',' expression ']'
//
// '[x,y]' is the commutator x^-1 y^-1 x y, 'x^y' is y^-1 x y, '1' is the
// empty word, and a zero power yields the empty word. Adjacent atoms
// multiply; names must be separated by whitespace or '*' ("r0r1" is one
// symbol, not a product). The result is always freely reduced.
namespace detail {

class RelatorParser {
 public:
  RelatorParser(const std::string& text, const Presentation& pres)
      : _text(text), _pres(pres) {}

  word_type parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", _pos);
    word_type w = expression();
    skip_ws();
    if (!at_end())
      throw ParseError(std::string("unexpected '") + peek() + "'", _pos);
    return w;
  }

 private:
  bool at_end() const { return _pos >= _text.size(); }
  char peek() const { return _text[_pos]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++_pos;
  }

  bool starts_atom(char c) const {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(' || c == '[' || c == '1';
  }

  word_type expression() {
    word_type w = term();
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        ++_pos;
        skip_ws();
        if (at_end() || !starts_atom(peek()))
          throw ParseError("expected a factor after '*'", _pos);
        w = concat(w, term());
      } else if (starts_atom(c)) {
        w = concat(w, term());
      } else {
        break;
      }
    }
    return w;
  }

  word_type term() {
    word_type w = atom();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '^') break;
      ++_pos;
      skip_ws();
      if (at_end()) throw ParseError("expected an exponent after '^'", _pos);
      char c = peek();
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        w = power(w, integer());
      } else if (starts_atom(c)) {
        w = conjugate(w, atom());
      } else {
        throw ParseError("expected an integer or conjugating factor", _pos);
      }
    }
    return w;
  }

  word_type atom() {
    skip_ws();
    if (at_end()) throw ParseError("expected a factor", _pos);
    char c = peek();
    if (c == '(') {
      ++_pos;
      word_type w = expression();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++_pos;
      word_type x = expression();
      expect(',');
      word_type y = expression();
      expect(']');
      return commutator(x, y);
    }
    if (c == '1') {
      std::size_t start = _pos;
      long long v = integer();
      if (v != 1) throw ParseError("numeric literal is not a factor", start);
      return {};
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("numeric literal is not a factor", _pos);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = _pos;
      std::string name;
      while (!at_end() &&
             (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += peek();
        ++_pos;
      }
      std::size_t idx = _pres.index_of(name);
      if (idx == static_cast<std::size_t>(-1))
        throw UnknownGeneratorError(name, start);
      return {make_letter(idx)};
    }
    throw ParseError(std::string("unexpected '") + c + "'", _pos);
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (!at_end() && peek() == '-') {
      neg = true;
      ++_pos;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer", _pos);
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000LL) throw ParseError("exponent too large", _pos);
      ++_pos;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      throw ParseError(std::string("expected '") + c + "'", _pos);
    ++_pos;
  }

  const std::string& _text;
  const Presentation& _pres;
  std::size_t _pos = 0;
};

}  // namespace detail

inline word_type parse_word(const std::string& text, const Presentation& pres) {
  return detail::RelatorParser(text, pres).parse();
}

}  // namespace hypertope
