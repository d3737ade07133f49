// Copyright 2026 The eqgb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQGB_TEXT_HPP
#define EQGB_TEXT_HPP

#include <cctype>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqgb/atom.hpp"
#include "eqgb/errors.hpp"
#include "eqgb/monomial.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/rational.hpp"
#include "eqgb/structure.hpp"

namespace eqgb {

/// Character cursor over one line of text, reporting 1-based positions.
class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0)
      : text_(text), line_(line), column_offset_(column_offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Next character without skipping whitespace.
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  Rational rational() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected a number");
    }
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den == pos_) fail("expected a denominator");
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }
  std::uint32_t natural() {
    skip_space();
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a natural number");
    return static_cast<std::uint32_t>(v);
  }

  std::size_t position() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }
  std::string_view rest() const { return text_.substr(pos_); }

  ParseError error(const std::string& message) const {
    return ParseError(message, line_, column_offset_ + pos_ + 1);
  }
  [[noreturn]] void fail(const std::string& message) const { throw error(message); }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input '" + std::string(rest()) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_offset_;
};

inline Structure parse_structure(Cursor& in) {
  in.skip_space();
  std::size_t start = in.position();
  std::string word = in.identifier();
  if (word == "Q") return Structure::dense();
  if (word == "eqatoms") return Structure::eqatoms();
  auto wrap = [&](auto&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      in.reset(start);
      in.fail(e.what());
    }
  };
  if (word == "finite") {
    in.expect('(');
    std::vector<std::string> names;
    if (in.peek() != ')') {
      do {
        names.push_back(in.identifier());
      } while (in.accept(','));
    }
    in.expect(')');
    if (names.empty()) {
      in.reset(start);
      in.fail("finite structure needs at least one symbol");
    }
    return wrap([&] { return Structure::finite(names); });
  }
  if (word == "sum" || word == "lex") {
    in.expect('(');
    Structure a = parse_structure(in);
    in.expect(',');
    Structure b = parse_structure(in);
    in.expect(')');
    return wrap([&] { return word == "sum" ? Structure::sum(a, b) : Structure::lex(a, b); });
  }
  if (word == "doubled") {
    in.expect('(');
    Structure a = parse_structure(in);
    in.expect(')');
    return wrap([&] { return Structure::doubled(a); });
  }
  in.reset(start);
  in.fail("unknown structure '" + word + "'");
}

inline Structure parse_structure(std::string_view text) {
  Cursor in(text);
  Structure s = parse_structure(in);
  in.expect_end();
  return s;
}

inline Atom parse_atom(Cursor& in, const Structure& s) {
  using K = Structure::Kind;
  in.skip_space();
  std::size_t start = in.position();
  switch (s.kind()) {
    case K::dense:
    case K::eqatoms: {
      if (in.peek() != 'a' || in.peek_raw(1) != '(') in.fail("expected an atom a(<rational>)");
      in.expect('a');
      in.expect('(');
      Rational v = in.rational();
      in.expect(')');
      return Atom::point(v);
    }
    case K::finite: {
      std::string name = in.identifier();
      if (auto a = s.symbol(name)) return *a;
      in.reset(start);
      in.fail("unknown symbol '" + name + "' for " + s.to_string());
    }
    case K::sum: {
      char c = in.peek();
      if ((c != 'L' && c != 'R') || in.peek_raw(1) != '.') in.fail("expected L.<atom> or R.<atom>");
      in.expect(c);
      in.expect('.');
      return c == 'L' ? Atom::left(parse_atom(in, s.left())) : Atom::right(parse_atom(in, s.right()));
    }
    case K::lex: {
      in.expect('(');
      Atom o = parse_atom(in, s.outer());
      in.expect(',');
      Atom i = parse_atom(in, s.inner());
      in.expect(')');
      return Atom::pair(o, i);
    }
    case K::doubled: {
      char c = in.peek();
      if ((c != '1' && c != '2') || in.peek_raw(1) != '.') in.fail("expected 1.<atom> or 2.<atom>");
      in.expect(c);
      in.expect('.');
      Atom b = parse_atom(in, s.base());
      return c == '1' ? Atom::first(b) : Atom::second(b);
    }
  }
  in.fail("unsupported structure");
}

inline Atom parse_atom(std::string_view text, const Structure& s) {
  Cursor in(text);
  Atom a = parse_atom(in, s);
  in.expect_end();
  return a;
}

using AtomReader = std::function<Atom(Cursor&)>;

namespace detail {

inline bool starts_number(Cursor& in) {
  char c = in.peek();
  if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  std::size_t k = 0;
  while (std::isdigit(static_cast<unsigned char>(in.peek_raw(k)))) ++k;
  return in.peek_raw(k) != '.';
}

inline Polynomial parse_term(Cursor& in, const AtomReader& read) {
  Rational coefficient(1);
  std::vector<Monomial::Entry> entries;
  do {
    if (starts_number(in)) {
      coefficient *= in.rational();
    } else {
      Atom a = read(in);
      Monomial::Exponent e = 1;
      if (in.accept('^')) e = in.natural();
      entries.emplace_back(a, e);
    }
  } while (in.accept('*'));
  return Polynomial::monomial(Monomial::from_entries(std::move(entries)), coefficient);
}

}  // namespace detail

/// Signed sum of terms `c*atom^e*...`; atoms are read by `read`.
inline Polynomial parse_polynomial(Cursor& in, const AtomReader& read) {
  Polynomial p;
  bool negative = false;
  if (in.accept('-')) {
    negative = true;
  } else {
    in.accept('+');
  }
  while (true) {
    Polynomial t = detail::parse_term(in, read);
    p += negative ? -t : t;
    if (in.accept('+')) {
      negative = false;
    } else if (in.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  return p;
}

inline AtomReader structure_reader(const Structure& s) {
  return [s](Cursor& in) { return parse_atom(in, s); };
}

inline Polynomial parse_polynomial(Cursor& in, const Structure& s) {
  return parse_polynomial(in, structure_reader(s));
}

inline Polynomial parse_polynomial(std::string_view text, const Structure& s) {
  Cursor in(text);
  Polynomial p = parse_polynomial(in, s);
  in.expect_end();
  return p;
}

/// A monomial written as a product of atom powers (or `1`).
inline Monomial parse_monomial(Cursor& in, const AtomReader& read) {
  std::size_t start = in.position();
  Polynomial p = parse_polynomial(in, read);
  if (p.size() != 1 || !p.lc().is_one()) {
    in.reset(start);
    in.fail("expected a monomial");
  }
  return p.lm();
}

inline Monomial parse_monomial(std::string_view text, const Structure& s) {
  Cursor in(text);
  Monomial m = parse_monomial(in, structure_reader(s));
  in.expect_end();
  return m;
}

}  // namespace eqgb

#endif  // EQGB_TEXT_HPP
