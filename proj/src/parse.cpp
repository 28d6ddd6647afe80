// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/parse.hpp"

#include <cctype>
#include <vector>

namespace cuntz {
namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : s_(text), n_(n) {}

  Element parse() {
    skip_ws();
    if (s_.substr(pos_) == "0" || (peek() == '0' && rest_is_ws(pos_ + 1))) return Element(n_);
    std::vector<Term> terms;
    Scalar sign(1);
    if (peek() == '-') {
      ++pos_;
      sign = Scalar(-1);
    }
    for (;;) {
      Term t = term();
      t.c *= sign;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      sign = Scalar(op == '+' ? 1 : -1);
      ++pos_;
    }
    return Element::from_terms(n_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool rest_is_ws(std::size_t p) const {
    for (; p < s_.size(); ++p)
      if (!std::isspace(static_cast<unsigned char>(s_[p]))) return false;
    return true;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Term term() {
    Scalar c(1);
    char ch = peek();
    if (ch == '(' || ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      c = scalar();
      expect('*');
    }
    Monomial m = atom();
    return Term{std::move(m), c};
  }

  Rational rational() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == den) fail("expected denominator");
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      throw ParseError(start, e.what());
    }
  }

  Scalar scalar() {
    if (peek() != '(') return Scalar(rational());
    ++pos_;
    Rational re = rational();
    char op = peek();
    if (op != '+' && op != '-') fail("expected '+' or '-' in complex scalar");
    ++pos_;
    Rational im = rational();
    if (op == '-') im = -im;
    expect('i');
    expect(')');
    return Scalar(re, im);
  }

  Word bracket_word() {
    expect('[');
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int l = s_[pos_] - '0';
      if (l < 1 || l > n_) fail("letter " + std::string(1, s_[pos_]) + " outside alphabet 1.." + std::to_string(n_));
      ++pos_;
    }
    Word w(std::string(s_.substr(start, pos_ - start)));
    expect(']');
    return w;
  }

  Monomial atom() {
    char ch = peek();
    if (ch == 'I') {
      ++pos_;
      return {};
    }
    if (ch == 'P') {
      ++pos_;
      Word w = bracket_word();
      return {w, w};
    }
    if (ch != 'S') fail("expected atom 'S[', 'P[' or 'I'");
    ++pos_;
    Word mu = bracket_word();
    if (pos_ < s_.size() && s_[pos_] == '*') fail("adjoint must follow a second S[...]; write S[]S[...]*");
    if (pos_ < s_.size() && s_[pos_] == 'S') {
      ++pos_;
      Word nu = bracket_word();
      if (pos_ >= s_.size() || s_[pos_] != '*') fail("expected '*' after second S[...]");
      ++pos_;
      return {mu, nu};
    }
    return {mu, Word{}};
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, int n) { return Parser(text, n).parse(); }

}  // namespace cuntz
