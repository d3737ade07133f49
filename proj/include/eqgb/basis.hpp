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

#ifndef EQGB_BASIS_HPP
#define EQGB_BASIS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eqgb/orbitset.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/saturation.hpp"
#include "eqgb/structure.hpp"

namespace eqgb {

/// col_V: atoms in V move to the first copy, all others to the second.
inline Polynomial colorize(const Polynomial& p, const AtomTuple& v) {
  AtomMap m;
  for (const Atom& a : p.dom()) {
    bool in_v = std::find(v.begin(), v.end(), a) != v.end();
    m.set(a, in_v ? Atom::first(a) : Atom::second(a));
  }
  return p.act(m);
}

/// Drops copy tags; colliding terms are added up.
inline Polynomial forget(const Polynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [a, e] : t.monomial.entries()) {
      if (!a.is_copy()) throw InputError("forget expects atoms of a doubled structure, got " + a.to_string());
      entries.emplace_back(a.inner(), e);
    }
    terms.push_back({Monomial::from_entries(std::move(entries)), t.coefficient});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// Every colouring col_V(h) for h a representative and V ⊆ dom(h).
inline OrbitSet freecol(const OrbitSet& h) {
  if (h.structure().is_reduct()) throw InputError("freecol runs in the ordered base structure");
  OrbitSet out(Structure::doubled(h.structure()));
  for (const Polynomial& p : h.reps()) {
    AtomTuple d = p.dom();
    if (d.size() >= 20) throw InputError("polynomial domain too large to colour");
    for (std::size_t mask = 0; mask < (std::size_t{1} << d.size()); ++mask) {
      AtomTuple v;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (mask & (std::size_t{1} << i)) v.push_back(d[i]);
      }
      out.insert(colorize(p, v));
    }
  }
  return out;
}

inline OrbitSet forget(const OrbitSet& b) {
  if (b.structure().kind() != Structure::Kind::doubled) throw InputError("forget expects a doubled structure");
  OrbitSet out(b.structure().base());
  for (const Polynomial& p : b.reps()) out.insert(forget(p));
  return out;
}

/// An equivariant Gröbner basis of the ideal generated by the orbits of H.
inline OrbitSet egb(const OrbitSet& h, const SaturationOptions& options = {}, SaturationStats* stats = nullptr) {
  if (h.structure().is_reduct()) throw InputError("egb runs in the ordered base structure");
  try {
    return forget(weakgb(freecol(h), options, stats));
  } catch (const BudgetExhausted& e) {
    throw BudgetExhausted(forget(e.partial()), e.rounds());
  }
}

/// One summand coefficient * monomial * act(rep, embedding) of a membership certificate.
struct CertificateTerm {
  Rational coefficient;
  Monomial monomial;
  Polynomial rep;
  AtomMap embedding;

  Polynomial value() const { return rep.act(embedding).mul_monomial(monomial, coefficient); }
};

using Certificate = std::vector<CertificateTerm>;

inline Polynomial evaluate_certificate(const Certificate& c) {
  Polynomial sum;
  for (const CertificateTerm& t : c) sum += t.value();
  return sum;
}

/// Greedy reduction by an equivariant Gröbner basis. On success the
/// certificate (if requested) sums to p exactly.
inline bool member(const OrbitSet& basis, const Polynomial& p, Certificate* certificate = nullptr) {
  if (basis.structure().is_reduct()) throw InputError("membership runs in the ordered base structure");
  require_in(basis.structure(), p);
  Reduction reduction(basis.structure(), basis);
  Polynomial current = p;
  Certificate local;
  while (!current.is_zero()) {
    bool progressed = false;
    reduction.for_each_step(current, [&](const ReductionStep& step) {
      local.push_back({step.coefficient, step.cofactor, step.reducer, step.embedding});
      current = step.residue;
      progressed = true;
      return false;
    });
    if (!progressed) return false;
  }
  if (certificate) *certificate = std::move(local);
  return true;
}

}  // namespace eqgb

#endif  // EQGB_BASIS_HPP
