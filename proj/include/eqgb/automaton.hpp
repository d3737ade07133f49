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

#ifndef EQGB_AUTOMATON_HPP
#define EQGB_AUTOMATON_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqgb/basis.hpp"
#include "eqgb/orbitset.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/saturation.hpp"
#include "eqgb/structure.hpp"

namespace eqgb {

/// An orbit-finite polynomial automaton. States assign rationals to the
/// indeterminates `V ∪ X`; the variables V are fixed by the group and live on
/// the left of `sum(finite(V), X)`, the letter atoms X on the right.
///
/// Reading a letter a updates every v in V by its template (a polynomial over
/// V and the placeholder `@`, which stands for a), the atom a by the
/// self-template, and leaves every other atom unchanged. Missing templates
/// are identities.
class PolynomialAutomaton {
 public:
  PolynomialAutomaton(Structure letters, std::vector<std::string> variables)
      : letters_(std::move(letters)),
        variables_(std::move(variables)),
        states_(Structure::sum(Structure::finite(variables_), letters_.computation_base())) {}

  /// Stand-in for the letter inside templates.
  static Atom placeholder() { return Atom::symbol("@", -1); }

  const Structure& letters() const { return letters_; }
  const std::vector<std::string>& variables() const { return variables_; }
  /// The ordered structure in which states, templates and the output live.
  const Structure& state_structure() const { return states_; }

  Atom variable(const std::string& name) const {
    auto s = states_.left().symbol(name);
    if (!s) throw InputError("unknown automaton variable '" + name + "'");
    return Atom::left(*s);
  }
  /// The state atom of a letter atom given in the letter structure.
  Atom letter(const Atom& a) const {
    letters_.require(a);
    return Atom::right(a);
  }

  void set_initial(const Atom& a, const Rational& value) {
    states_.require(a);
    if (value.is_zero()) {
      initial_.erase(a);
    } else {
      initial_[a] = value;
    }
  }
  void set_template(const std::string& v, Polynomial p) {
    require_template(p);
    templates_[variable(v)] = std::move(p);
  }
  void set_self_template(Polynomial p) {
    require_template(p);
    self_ = std::move(p);
  }
  void set_output(Polynomial f) {
    for (const Atom& a : f.dom()) {
      if (!is_variable(a)) throw InputError("output may only use automaton variables, found " + a.to_string());
    }
    output_ = std::move(f);
  }

  const std::map<Atom, Rational>& initial() const { return initial_; }
  const Polynomial& output() const { return output_; }
  bool has_template(const std::string& v) const { return templates_.count(variable(v)) > 0; }
  bool has_self_template() const { return self_.has_value(); }

  /// The template of v, defaulting to v itself.
  Polynomial template_of(const Atom& v) const {
    auto it = templates_.find(v);
    return it == templates_.end() ? Polynomial::atom(v) : it->second;
  }
  Polynomial self_template() const { return self_ ? *self_ : Polynomial::atom(placeholder()); }

  /// δ(a, x): the polynomial that becomes the value of x after reading a.
  Polynomial update(const Atom& a, const Atom& x) const {
    require_letter(a);
    Polynomial t;
    if (is_variable(x)) {
      t = template_of(x);
    } else if (x == a) {
      t = self_template();
    } else {
      return Polynomial::atom(x);
    }
    return instantiate(t, a);
  }

  /// Value of the initial state at an atom; unlisted atoms read 0.
  Rational initial_value(const Atom& a) const {
    auto it = initial_.find(a);
    return it == initial_.end() ? Rational(0) : it->second;
  }

  /// Atoms where the initial state is nonzero.
  AtomTuple support() const {
    AtomTuple out;
    for (const auto& [a, v] : initial_) out.push_back(a);
    return out;
  }

  bool is_variable(const Atom& a) const { return a.is_side() && a.side_tag() == Atom::Side::left; }

  void require_letter(const Atom& a) const {
    if (!a.is_side() || a.side_tag() != Atom::Side::right || !states_.contains(a)) {
      throw InputError("not a letter atom: " + a.to_string());
    }
  }

 private:
  Polynomial instantiate(const Polynomial& t, const Atom& a) const {
    Atom at = placeholder();
    return t.substitute([&](const Atom& x) { return x == at ? Polynomial::atom(a) : Polynomial::atom(x); });
  }

  void require_template(const Polynomial& p) const {
    Atom at = placeholder();
    for (const Atom& a : p.dom()) {
      if (!(a == at) && !is_variable(a)) {
        throw InputError("templates may only use automaton variables and @, found " + a.to_string());
      }
      if (!(a == at)) states_.require(a);
    }
  }

  Structure letters_;
  std::vector<std::string> variables_;
  Structure states_;
  std::map<Atom, Rational> initial_;
  std::map<Atom, Polynomial> templates_;
  std::optional<Polynomial> self_;
  Polynomial output_;
};

/// p[x ↦ δ(a, x)]: the polynomial whose value before reading a equals the
/// value of p after reading a.
inline Polynomial pullback(const PolynomialAutomaton& A, const Polynomial& p, const Atom& a) {
  A.require_letter(a);
  return p.substitute([&](const Atom& x) { return A.update(a, x); });
}

struct ZeronessReport {
  bool zero = false;
  std::size_t rounds = 0;
  OrbitSet basis;
  /// On a nonzero verdict: a basis element translate that is nonzero initially.
  std::optional<Polynomial> witness;

  explicit ZeronessReport(Structure s) : basis(std::move(s)) {}
};

struct ZeronessOptions {
  SaturationOptions saturation;
  std::function<void(std::size_t round, const std::vector<Polynomial>& added)> trace;
};

/// Letters whose orbits, relative to the atoms of p, cover all letters.
inline std::vector<Atom> letter_placements(const PolynomialAutomaton& A, const Polynomial& p) {
  const Structure& s = A.state_structure();
  std::vector<Atom> out;
  AtomTuple pinned = p.dom();
  for (const Atom& u : single_reps(s.right())) {
    Atom moving = Atom::right(u);
    for (const AtomMap& m : placements(s, {moving}, pinned)) out.push_back(m.at(moving));
  }
  return out;
}

/// Backward fixpoint: the ideal of polynomials that vanish after any word,
/// tested against the initial state.
inline ZeronessReport zeroness_report(const PolynomialAutomaton& A, const ZeronessOptions& options = {}) {
  const Structure& s = A.state_structure();
  ZeronessReport report(s);
  OrbitSet gens(s);
  gens.insert(A.output());
  report.basis = egb(gens, options.saturation);

  std::size_t round = 0;
  while (true) {
    std::vector<Polynomial> added;
    for (const Polynomial& g : report.basis.reps()) {
      for (const Atom& a : letter_placements(A, g)) {
        Polynomial q = pullback(A, g, a);
        if (!member(report.basis, q)) added.push_back(q);
      }
    }
    if (options.trace) options.trace(round + 1, added);
    if (added.empty()) break;
    if (++round > options.saturation.max_rounds) throw BudgetExhausted(report.basis, round - 1);
    OrbitSet next = report.basis;
    for (const Polynomial& q : added) next.insert(q);
    OrbitSet basis = egb(next, options.saturation);
    if (options.saturation.check_invariants) {
      for (const Polynomial& g : report.basis.reps()) {
        if (!member(basis, g)) throw InvariantViolation("backward ideal chain is not increasing");
      }
    }
    report.basis = std::move(basis);
  }
  report.rounds = round;

  AtomTuple support = A.support();
  for (const Polynomial& g : report.basis.reps()) {
    for (const AtomMap& m : placements(s, g.dom(), support)) {
      Polynomial translate = g.act(m);
      if (!translate.evaluate([&](const Atom& x) { return A.initial_value(x); }).is_zero()) {
        report.witness = translate;
        report.zero = false;
        return report;
      }
    }
  }
  report.zero = true;
  return report;
}

inline bool zeroness(const PolynomialAutomaton& A, const ZeronessOptions& options = {}) {
  return zeroness_report(A, options).zero;
}

}  // namespace eqgb

#endif  // EQGB_AUTOMATON_HPP
