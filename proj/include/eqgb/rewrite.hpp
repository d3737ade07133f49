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

#ifndef EQGB_REWRITE_HPP
#define EQGB_REWRITE_HPP

#include <utility>
#include <vector>

#include "eqgb/ideal.hpp"
#include "eqgb/monomial.hpp"
#include "eqgb/polynomial.hpp"

namespace eqgb {

/// Bidirectional equivariant rewriting on monomials: n·π(m) ↔ n·π(m') for
/// every rule {m, m'}, embedding π and monomial n.
struct MonomialRewriteSystem {
  Structure structure;
  std::vector<std::pair<Monomial, Monomial>> rules;
};

/// The binomial ideal whose members m_s - m_t are exactly the reachable pairs.
inline EquivariantIdeal rewrite_ideal(const MonomialRewriteSystem& r, const SaturationOptions& options = {}) {
  std::vector<Polynomial> gens;
  for (const auto& [m, n] : r.rules) {
    Polynomial b = Polynomial::monomial(m) - Polynomial::monomial(n);
    if (!b.is_zero()) gens.push_back(std::move(b));
  }
  return EquivariantIdeal::from_generators(r.structure, gens, options);
}

inline bool reach(const EquivariantIdeal& ideal, const Monomial& source, const Monomial& target) {
  return ideal.member(Polynomial::monomial(source) - Polynomial::monomial(target));
}

inline bool reach(const MonomialRewriteSystem& r, const Monomial& source, const Monomial& target,
                  const SaturationOptions& options = {}) {
  if (source == target) return true;
  return reach(rewrite_ideal(r, options), source, target);
}

}  // namespace eqgb

#endif  // EQGB_REWRITE_HPP
