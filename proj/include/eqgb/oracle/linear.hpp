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

#ifndef EQGB_ORACLE_LINEAR_HPP
#define EQGB_ORACLE_LINEAR_HPP

// Degree-bounded membership by linear algebra: p is tested against the span
// of all products m * g∘π whose atoms lie in a fixed finite window and whose
// degree stays under a bound. A positive answer is a proof of membership.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "eqgb/monomial.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/structure.hpp"

namespace eqgb::oracle {

/// Injections of sorted `source` into `window` that the group realizes.
inline std::vector<AtomMap> window_maps(const Structure& s, const AtomTuple& source, const AtomTuple& window) {
  std::vector<AtomMap> out;
  const std::size_t k = source.size();
  if (k > window.size()) return out;
  std::vector<std::size_t> idx(window.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<bool> chosen(window.size(), false);
  AtomTuple image(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      out.emplace_back(source, image);
      return;
    }
    for (std::size_t j = 0; j < window.size(); ++j) {
      if (chosen[j]) continue;
      const Atom& y = window[j];
      bool ok = true;
      switch (s.kind()) {
        case Structure::Kind::eqatoms:
          break;
        case Structure::Kind::dense:
          ok = i == 0 || image[i - 1] < y;
          break;
        case Structure::Kind::finite:
          ok = y == source[i];
          break;
        default:
          throw InputError("the linear oracle supports Q, eqatoms and finite structures");
      }
      if (!ok) continue;
      chosen[j] = true;
      image[i] = y;
      rec(i + 1);
      chosen[j] = false;
    }
  };
  rec(0);
  return out;
}

/// All monomials over `window` of total degree at most d.
inline std::vector<Monomial> monomials_up_to(const AtomTuple& window, std::size_t d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Entry> entries;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == window.size()) {
      out.push_back(Monomial::from_entries(entries));
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      if (e) entries.emplace_back(window[i], static_cast<Monomial::Exponent>(e));
      rec(i + 1, left - e);
      if (e) entries.pop_back();
    }
  };
  rec(0, d);
  return out;
}

/// Row-echelon span keyed by leading monomial.
class Span {
 public:
  void add(Polynomial row) {
    row = reduce(std::move(row));
    if (row.is_zero()) return;
    row = row.monic();
    Monomial lm = row.terms().front().monomial;
    rows_.emplace(std::move(lm), std::move(row));
  }

  Polynomial reduce(Polynomial p) const {
    Polynomial rest;
    while (!p.is_zero()) {
      const Term lead = p.terms().front();
      auto it = rows_.find(lead.monomial);
      if (it == rows_.end()) {
        Polynomial t = Polynomial::monomial(lead.monomial, lead.coefficient);
        rest += t;
        p -= t;
      } else {
        p -= it->second.scale(lead.coefficient);
      }
    }
    return rest;
  }

  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
  };
  std::unordered_map<Monomial, Polynomial, Hash> rows_;
};

/// p ∈ span{ m * g∘π : atoms within the window, degree <= max_degree }. The
/// window is dom(p) padded with fresh atoms up to `window_size`.
inline bool bounded_member(const Structure& s, const std::vector<Polynomial>& gens, const Polynomial& p,
                           std::size_t max_degree, std::size_t window_size) {
  AtomTuple window = p.dom();
  if (s.kind() == Structure::Kind::finite) {
    window = s.symbols();
  } else {
    for (long next = 1; window.size() < window_size; ++next) {
      Atom a = Atom::point(next);
      if (std::find(window.begin(), window.end(), a) == window.end()) window.push_back(a);
    }
  }
  std::sort(window.begin(), window.end());
  Span span;
  for (const Polynomial& g : gens) {
    if (g.is_zero() || g.degree() > max_degree) continue;
    AtomTuple d = g.dom();
    auto cofactors = monomials_up_to(window, max_degree - g.degree());
    for (const AtomMap& pi : window_maps(s, d, window)) {
      Polynomial moved = g.act(pi);
      for (const Monomial& m : cofactors) span.add(moved.mul_monomial(m, Rational(1)));
    }
  }
  return span.contains(p);
}

}  // namespace eqgb::oracle

#endif  // EQGB_ORACLE_LINEAR_HPP
