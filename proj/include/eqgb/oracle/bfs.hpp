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

#ifndef EQGB_ORACLE_BFS_HPP
#define EQGB_ORACLE_BFS_HPP

// Breadth-first exploration of the rewrite relation on monomial orbits,
// truncated to a bounded set of monomials.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "eqgb/monomial.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/rewrite.hpp"
#include "eqgb/structure.hpp"

namespace eqgb::oracle {

struct BfsBound {
  std::size_t atoms = 3;
  std::uint32_t exponent = 4;
  std::size_t max_states = 200000;
};

enum class BfsOutcome { found, not_found, truncated };

/// A key identifying the orbit of a monomial under the group elements that
/// fix every atom of `fixed` (sorted).
inline std::string orbit_key(const Structure& s, const Monomial& m, const AtomTuple& fixed = {}) {
  auto pinned = [&](const Atom& a) { return std::binary_search(fixed.begin(), fixed.end(), a); };
  switch (s.kind()) {
    case Structure::Kind::eqatoms: {
      std::vector<std::uint32_t> e;
      std::string out;
      for (const auto& [a, k] : m.entries()) {
        if (pinned(a)) {
          out += a.to_string() + "^" + std::to_string(k) + ",";
        } else {
          e.push_back(k);
        }
      }
      std::sort(e.begin(), e.end());
      out += "|";
      for (std::uint32_t k : e) out += std::to_string(k) + ",";
      return out;
    }
    case Structure::Kind::dense: {
      // Order type relative to the fixed atoms.
      std::string out;
      std::size_t f = 0;
      for (const auto& [a, k] : m.entries()) {
        while (f < fixed.size() && fixed[f] < a) out += fixed[f++].to_string() + "^0,";
        if (f < fixed.size() && fixed[f] == a) {
          out += a.to_string() + "^" + std::to_string(k) + ",";
          ++f;
        } else {
          out += "*^" + std::to_string(k) + ",";
        }
      }
      return out;
    }
    default:
      if (fixed.empty() && s.kind() != Structure::Kind::finite) {
        return poly_canonical(s, Polynomial::monomial(m)).to_string();
      }
      return m.to_string();
  }
}

inline bool within(const Monomial& m, const BfsBound& bound) {
  if (m.size() > bound.atoms) return false;
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [&](const Monomial::Entry& e) { return e.second <= bound.exponent; });
}

/// One-step rewrites of n, one per orbit of the applied embedding relative
/// to the atoms of n and `fixed`.
inline std::vector<Monomial> rewrite_neighbours(const MonomialRewriteSystem& r, const Monomial& n,
                                                const AtomTuple& fixed = {}) {
  std::vector<Monomial> out;
  AtomTuple pinned = n.dom();
  pinned.insert(pinned.end(), fixed.begin(), fixed.end());
  pinned = sorted_distinct(pinned);
  for (const auto& rule : r.rules) {
    for (int dir = 0; dir < 2; ++dir) {
      const Monomial& from = dir == 0 ? rule.first : rule.second;
      const Monomial& to = dir == 0 ? rule.second : rule.first;
      AtomTuple moving = from.dom();
      for (const Atom& a : to.dom()) moving.push_back(a);
      moving = sorted_distinct(moving);
      Structure s = r.structure;
      for (const AtomMap& pi : placements(s, moving, pinned)) {
        Monomial image = from.rename(pi);
        if (!image.divides(n)) continue;
        out.push_back(image.quotient_of(n) * to.rename(pi));
      }
    }
  }
  return out;
}

inline BfsOutcome bfs_reach(const MonomialRewriteSystem& r, const Monomial& source, const Monomial& target,
                            const BfsBound& bound) {
  // Exact reachability: states are identified only up to the group elements
  // fixing the atoms of source and target.
  const Structure& s = r.structure;
  AtomTuple fixed = source.dom();
  for (const Atom& a : target.dom()) fixed.push_back(a);
  fixed = sorted_distinct(fixed);
  const std::string goal = orbit_key(s, target, fixed);
  std::unordered_set<std::string> seen{orbit_key(s, source, fixed)};
  if (*seen.begin() == goal) return BfsOutcome::found;
  std::deque<Monomial> queue{source};
  bool truncated = false;
  while (!queue.empty()) {
    Monomial n = std::move(queue.front());
    queue.pop_front();
    for (Monomial& next : rewrite_neighbours(r, n, fixed)) {
      if (!within(next, bound)) continue;
      std::string key = orbit_key(s, next, fixed);
      if (key == goal) return BfsOutcome::found;
      if (!seen.insert(std::move(key)).second) continue;
      if (seen.size() > bound.max_states) {
        truncated = true;
        continue;
      }
      queue.push_back(std::move(next));
    }
  }
  return truncated ? BfsOutcome::truncated : BfsOutcome::not_found;
}

}  // namespace eqgb::oracle

#endif  // EQGB_ORACLE_BFS_HPP
