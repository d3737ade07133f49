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

#ifndef EQGB_PROBLEM_HPP
#define EQGB_PROBLEM_HPP

// Line-oriented problem files: ideals, automata and rewrite systems. Every
// file starts with a `structure:` line; `#` starts a comment.

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eqgb/automaton.hpp"
#include "eqgb/errors.hpp"
#include "eqgb/orbitset.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/rewrite.hpp"
#include "eqgb/structure.hpp"
#include "eqgb/text.hpp"

namespace eqgb {

struct IdealFile {
  Structure structure;
  std::vector<Polynomial> generators;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace detail {

/// One non-blank line with its comment removed.
struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back({number, std::move(line)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

/// Reads the leading keyword (letters, digits, `_`) and an optional `:`.
inline std::string keyword(Cursor& in, bool colon) {
  std::string k = in.identifier();
  if (colon) in.expect(':');
  return k;
}

inline Structure leading_structure(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("missing 'structure:' line", 1, 1);
  Cursor in(lines[0].text, lines[0].number);
  std::size_t start = in.position();
  if (in.identifier() != "structure") {
    in.reset(start);
    in.fail("the first line must be 'structure: <descriptor>'");
  }
  in.expect(':');
  Structure s = parse_structure(in);
  in.expect_end();
  return s;
}

template <class F>
void for_body(const std::vector<Line>& lines, F&& f) {
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Cursor in(lines[i].text, lines[i].number);
    std::size_t start = in.position();
    std::string k = in.identifier();
    f(in, k, start);
    in.expect_end();
  }
}

inline void unknown_key(Cursor& in, std::size_t start, const std::string& k, const char* kind) {
  in.reset(start);
  in.fail("unknown " + std::string(kind) + " line '" + k + "'");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ideals: `gen: <polynomial>` lines.

inline IdealFile parse_ideal_file(std::string_view text) {
  auto lines = detail::content_lines(text);
  IdealFile f{detail::leading_structure(lines), {}};
  AtomReader read = structure_reader(f.structure);
  detail::for_body(lines, [&](Cursor& in, const std::string& k, std::size_t start) {
    if (k != "gen") detail::unknown_key(in, start, k, "ideal file");
    in.expect(':');
    f.generators.push_back(parse_polynomial(in, read));
  });
  return f;
}

inline std::string print_ideal_file(const IdealFile& f) {
  std::string out = "structure: " + f.structure.to_string() + "\n";
  for (const Polynomial& g : f.generators) out += "gen: " + g.to_string() + "\n";
  return out;
}

/// A basis or other orbit set, written as a re-readable ideal file.
inline std::string print_basis(const OrbitSet& b) {
  return print_ideal_file({b.structure(), b.reps()});
}

// ---------------------------------------------------------------------------
// Rewrite systems: `rule <monomial> <-> <monomial>` lines.

inline MonomialRewriteSystem parse_rewrite_file(std::string_view text) {
  auto lines = detail::content_lines(text);
  MonomialRewriteSystem r{detail::leading_structure(lines), {}};
  AtomReader read = structure_reader(r.structure);
  detail::for_body(lines, [&](Cursor& in, const std::string& k, std::size_t start) {
    if (k != "rule") detail::unknown_key(in, start, k, "rewrite file");
    Monomial m = parse_monomial(in, read);
    in.expect('<');
    in.expect('-');
    in.expect('>');
    Monomial n = parse_monomial(in, read);
    r.rules.emplace_back(std::move(m), std::move(n));
  });
  return r;
}

inline std::string print_rewrite_file(const MonomialRewriteSystem& r) {
  std::string out = "structure: " + r.structure.to_string() + "\n";
  for (const auto& [m, n] : r.rules) out += "rule " + m.to_string() + " <-> " + n.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Automata.
//
//   V: v, w
//   init: v = 1, a(5) = 2
//   delta v <- v^2 + @
//   delta self <- 0
//   output: v - 1

/// Atoms in automaton files: variable names, letters of the structure, `@`.
inline AtomReader automaton_reader(const PolynomialAutomaton& a, bool allow_placeholder) {
  return [&a, allow_placeholder](Cursor& in) -> Atom {
    if (in.peek() == '@') {
      if (!allow_placeholder) in.fail("'@' is only allowed in delta lines");
      in.expect('@');
      return PolynomialAutomaton::placeholder();
    }
    std::size_t start = in.position();
    if (std::isalpha(static_cast<unsigned char>(in.peek())) || in.peek() == '_') {
      std::string name = in.identifier();
      if (a.state_structure().left().symbol(name) && in.peek_raw() != '(') return a.variable(name);
      in.reset(start);
    }
    return a.letter(parse_atom(in, a.letters()));
  };
}

inline std::string automaton_atom_name(const Atom& x) {
  if (x == PolynomialAutomaton::placeholder()) return "@";
  if (x.is_side()) return x.inner().to_string();
  return x.to_string();
}

inline PolynomialAutomaton parse_automaton_file(std::string_view text) {
  auto lines = detail::content_lines(text);
  Structure letters = detail::leading_structure(lines);
  if (letters.kind() == Structure::Kind::doubled) {
    throw ParseError("automaton letters cannot range over a doubled structure", lines[0].number, 1);
  }
  std::optional<PolynomialAutomaton> a;
  std::set<std::string> seen_delta;
  bool output = false;
  auto require_v = [&](Cursor& in, std::size_t start) {
    if (!a) {
      in.reset(start);
      in.fail("the 'V:' line must precede init, delta and output lines");
    }
  };
  detail::for_body(lines, [&](Cursor& in, const std::string& k, std::size_t start) {
    if (k == "V") {
      if (a) in.fail("duplicate 'V:' line");
      in.expect(':');
      std::vector<std::string> names;
      if (!in.at_end()) {
        do {
          std::size_t at = in.position();
          std::string name = in.identifier();
          for (const std::string& n : names) {
            if (n == name) {
              in.reset(at);
              in.fail("duplicate variable '" + name + "'");
            }
          }
          if (letters.kind() == Structure::Kind::finite && letters.symbol(name)) {
            in.reset(at);
            in.fail("variable '" + name + "' clashes with a letter symbol");
          }
          names.push_back(std::move(name));
        } while (in.accept(','));
      }
      try {
        a.emplace(letters, names);
      } catch (const InputError& e) {
        in.fail(e.what());
      }
      return;
    }
    require_v(in, start);
    if (k == "init") {
      in.expect(':');
      if (in.at_end()) return;
      AtomReader read = automaton_reader(*a, false);
      do {
        Atom x = read(in);
        in.expect('=');
        if (a->initial().count(x)) in.fail("duplicate initial value for " + automaton_atom_name(x));
        a->set_initial(x, in.rational());
      } while (in.accept(','));
    } else if (k == "delta") {
      std::size_t at = in.position();
      std::string target = in.identifier();
      if (target != "self" && !a->state_structure().left().symbol(target)) {
        in.reset(at);
        in.fail("delta target must be 'self' or a variable, got '" + target + "'");
      }
      if (!seen_delta.insert(target).second) {
        in.reset(at);
        in.fail("duplicate delta line for '" + target + "'");
      }
      in.expect('<');
      in.expect('-');
      std::size_t poly_at = in.position();
      Polynomial p = parse_polynomial(in, automaton_reader(*a, true));
      try {
        if (target == "self") {
          a->set_self_template(std::move(p));
        } else {
          a->set_template(target, std::move(p));
        }
      } catch (const InputError& e) {
        in.reset(poly_at);
        in.fail(e.what());
      }
    } else if (k == "output") {
      if (output) in.fail("duplicate 'output:' line");
      in.expect(':');
      std::size_t poly_at = in.position();
      Polynomial p = parse_polynomial(in, automaton_reader(*a, false));
      try {
        a->set_output(std::move(p));
      } catch (const InputError& e) {
        in.reset(poly_at);
        in.fail(e.what());
      }
      output = true;
    } else {
      detail::unknown_key(in, start, k, "automaton file");
    }
  });
  if (!a) throw ParseError("missing 'V:' line", lines.back().number, 1);
  if (!output) throw ParseError("missing 'output:' line", lines.back().number, 1);
  return std::move(*a);
}

inline std::string print_automaton_file(const PolynomialAutomaton& a) {
  std::string out = "structure: " + a.letters().to_string() + "\n";
  out += "V:";
  for (std::size_t i = 0; i < a.variables().size(); ++i) out += (i ? ", " : " ") + a.variables()[i];
  out += "\n";
  if (!a.initial().empty()) {
    out += "init:";
    bool first = true;
    for (const auto& [x, v] : a.initial()) {
      out += (first ? " " : ", ") + automaton_atom_name(x) + " = " + v.to_string();
      first = false;
    }
    out += "\n";
  }
  for (const std::string& v : a.variables()) {
    if (a.has_template(v)) {
      out += "delta " + v + " <- " + a.template_of(a.variable(v)).to_string(automaton_atom_name) + "\n";
    }
  }
  if (a.has_self_template()) out += "delta self <- " + a.self_template().to_string(automaton_atom_name) + "\n";
  out += "output: " + a.output().to_string(automaton_atom_name) + "\n";
  return out;
}

}  // namespace eqgb

#endif  // EQGB_PROBLEM_HPP
