#pragma once

// Small recursive-descent parser shared by the textual syntaxes of the
// library (Laurent/rational coefficients, polynomials, Hecke elements, ...).
//
// Arithmetic grammar handled by parse_arith():
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] digits)?
//   atom   := digits | identifier | '(' expr ')'
//
// The ring is supplied through an `Ops` policy with the members
//   T from_int(const mpz_class&), T ident(const std::string&, Cursor&, size_t pos),
//   T pow(const T&, long, size_t pos), T div(const T&, const T&, size_t pos).

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace affcat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
        pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

class Cursor {
 public:
  explicit Cursor(const std::string& s, size_t pos = 0) : s_(s), pos_(pos) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  // Peek without skipping whitespace first.
  char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(const std::string& word) {
    skip_ws();
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool peek_alpha() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  mpz_class number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(s_.substr(start, pos_ - start));
  }
  long small_int() {
    skip_ws();
    bool neg = false;
    if (peek_raw() == '-') {
      neg = true;
      ++pos_;
    }
    mpz_class v = number();
    if (!v.fits_slong_p()) fail("integer out of range");
    long x = v.get_si();
    return neg ? -x : x;
  }
  // Identifier: letter followed by letters/digits.
  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return s_.substr(start, pos_ - start);
  }

  size_t pos() const { return pos_; }
  void set_pos(size_t p) { pos_ = p; }
  const std::string& text() const { return s_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

 private:
  const std::string& s_;
  size_t pos_;
};

namespace detail {

template <class T, class Ops>
T parse_sum(Cursor& c, Ops& ops);

template <class T, class Ops>
T parse_atom(Cursor& c, Ops& ops) {
  if (c.accept('(')) {
    T v = parse_sum<T>(c, ops);
    c.expect(')');
    return v;
  }
  if (c.peek_digit()) return ops.from_int(c.number());
  if (c.peek_alpha()) {
    c.skip_ws();
    size_t at = c.pos();
    std::string name = c.identifier();
    return ops.ident(name, c, at);
  }
  c.fail("unexpected character");
}

template <class T, class Ops>
T parse_power(Cursor& c, Ops& ops) {
  T base = parse_atom<T>(c, ops);
  if (c.accept('^')) {
    size_t at = c.pos();
    long e = c.small_int();
    return ops.pow(base, e, at);
  }
  return base;
}

template <class T, class Ops>
T parse_unary(Cursor& c, Ops& ops) {
  if (c.accept('-')) return -parse_unary<T>(c, ops);
  return parse_power<T>(c, ops);
}

template <class T, class Ops>
T parse_product(Cursor& c, Ops& ops) {
  T v = parse_unary<T>(c, ops);
  for (;;) {
    if (c.accept('*')) {
      v = v * parse_unary<T>(c, ops);
    } else if (c.peek() == '/') {
      size_t at = c.pos();
      c.accept('/');
      v = ops.div(v, parse_unary<T>(c, ops), at);
    } else {
      return v;
    }
  }
}

template <class T, class Ops>
T parse_sum(Cursor& c, Ops& ops) {
  T v = parse_product<T>(c, ops);
  for (;;) {
    if (c.accept('+')) {
      v = v + parse_product<T>(c, ops);
    } else if (c.accept('-')) {
      v = v - parse_product<T>(c, ops);
    } else {
      return v;
    }
  }
}

}  // namespace detail

// Parses an arithmetic expression starting at the cursor; stops at the first
// character that cannot continue the expression.
template <class T, class Ops>
T parse_arith(Cursor& c, Ops& ops) {
  return detail::parse_sum<T>(c, ops);
}

// Parses a complete string; trailing garbage is an error.
template <class T, class Ops>
T parse_arith_full(const std::string& text, Ops ops) {
  Cursor c(text);
  T v = parse_arith<T>(c, ops);
  if (!c.at_end()) c.fail("trailing characters");
  return v;
}

}  // namespace affcat
