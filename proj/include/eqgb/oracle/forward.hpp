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

#ifndef EQGB_ORACLE_FORWARD_HPP
#define EQGB_ORACLE_FORWARD_HPP

// Bounded forward simulation of polynomial automata: runs every word up to a
// given length, one letter per orbit relative to the atoms seen so far.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "eqgb/automaton.hpp"

namespace eqgb::oracle {

using State = std::map<Atom, Rational>;

inline Rational read_state(const State& q, const Atom& x) {
  auto it = q.find(x);
  return it == q.end() ? Rational(0) : it->second;
}

inline State step(const PolynomialAutomaton& A, const State& q, const Atom& a) {
  auto value = [&](const Atom& x) { return read_state(q, x); };
  State next = q;
  auto put = [&](const Atom& x, Rational v) {
    if (v.is_zero()) {
      next.erase(x);
    } else {
      next[x] = std::move(v);
    }
  };
  for (const std::string& name : A.variables()) {
    Atom v = A.variable(name);
    put(v, A.update(a, v).evaluate(value));
  }
  put(a, A.update(a, a).evaluate(value));
  return next;
}

struct ForwardResult {
  bool zero = true;
  std::size_t words = 0;
  /// A word with nonzero output, when one exists.
  std::optional<std::vector<Atom>> witness;
};

/// Runs all letter words of length ≤ max_length and checks the output after
/// every prefix.
inline ForwardResult forward_zeroness(const PolynomialAutomaton& A, std::size_t max_length) {
  const Structure& s = A.state_structure();
  ForwardResult result;
  State q0 = A.initial();
  AtomTuple seen;
  for (const auto& [a, v] : q0) {
    if (a.is_side() && a.side_tag() == Atom::Side::right) seen.push_back(a);
  }
  std::vector<Atom> word;
  auto visit = [&](auto&& self, const State& q, const AtomTuple& pinned) -> bool {
    ++result.words;
    if (!A.output().evaluate([&](const Atom& x) { return read_state(q, x); }).is_zero()) {
      result.zero = false;
      result.witness = word;
      return false;
    }
    if (word.size() == max_length) return true;
    for (const Atom& u : single_reps(s.right())) {
      Atom moving = Atom::right(u);
      for (const AtomMap& m : placements(s, {moving}, pinned)) {
        Atom a = m.at(moving);
        AtomTuple next_pinned = pinned;
        if (std::find(next_pinned.begin(), next_pinned.end(), a) == next_pinned.end()) next_pinned.push_back(a);
        std::sort(next_pinned.begin(), next_pinned.end());
        word.push_back(a);
        bool ok = self(self, step(A, q, a), next_pinned);
        word.pop_back();
        if (!ok) return false;
      }
    }
    return true;
  };
  std::sort(seen.begin(), seen.end());
  visit(visit, q0, seen);
  return result;
}

}  // namespace eqgb::oracle

#endif  // EQGB_ORACLE_FORWARD_HPP
