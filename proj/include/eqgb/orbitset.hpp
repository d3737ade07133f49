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

#ifndef EQGB_ORBITSET_HPP
#define EQGB_ORBITSET_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eqgb/polynomial.hpp"
#include "eqgb/structure.hpp"

namespace eqgb {

/// An orbit-finite equivariant set of nonzero polynomials, stored as canonical
/// monic representatives sorted by their text. Membership is up to the group
/// and up to nonzero scalars.
class OrbitSet {
 public:
  explicit OrbitSet(Structure s) : structure_(std::move(s)) {}
  OrbitSet(Structure s, const std::vector<Polynomial>& members) : structure_(std::move(s)) {
    for (const Polynomial& p : members) insert(p);
  }

  const Structure& structure() const { return structure_; }
  const std::vector<Polynomial>& reps() const { return reps_; }
  const std::vector<std::string>& keys() const { return keys_; }
  std::size_t size() const { return reps_.size(); }
  bool empty() const { return reps_.empty(); }

  bool contains(const Polynomial& p) const {
    if (p.is_zero()) return false;
    return find_key(poly_canonical(structure_, p).to_string()).second;
  }

  /// Adds the orbit of p; returns false when it was already present (or p = 0).
  bool insert(const Polynomial& p) {
    if (p.is_zero()) return false;
    Polynomial c = poly_canonical(structure_, p);
    return insert_canonical(std::move(c));
  }

  /// Inserts an already canonical representative.
  bool insert_canonical(Polynomial c) {
    std::string key = c.to_string();
    auto [pos, found] = find_key(key);
    if (found) return false;
    keys_.insert(keys_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(key));
    reps_.insert(reps_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(c));
    return true;
  }

  /// Adds every orbit of `other`; returns the number of new orbits.
  std::size_t unite(const OrbitSet& other) {
    require_same(other);
    std::size_t added = 0;
    for (const Polynomial& p : other.reps_) added += insert_canonical(p) ? 1 : 0;
    return added;
  }

  bool includes(const OrbitSet& other) const {
    require_same(other);
    return std::all_of(other.keys_.begin(), other.keys_.end(),
                       [this](const std::string& k) { return find_key(k).second; });
  }

  friend bool operator==(const OrbitSet& x, const OrbitSet& y) {
    return x.structure_ == y.structure_ && x.keys_ == y.keys_;
  }

  /// Structure line followed by the bracketed representative list.
  std::string to_string() const {
    std::string out = "structure: " + structure_.to_string() + "\n[\n";
    for (const std::string& k : keys_) out += "  " + k + "\n";
    return out + "]\n";
  }

 private:
  std::pair<std::size_t, bool> find_key(const std::string& key) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    return {static_cast<std::size_t>(it - keys_.begin()), it != keys_.end() && *it == key};
  }
  void require_same(const OrbitSet& other) const {
    if (!(structure_ == other.structure_)) throw InputError("orbit sets over different structures");
  }

  Structure structure_;
  std::vector<Polynomial> reps_;
  std::vector<std::string> keys_;
};

inline OrbitSet unite(const OrbitSet& s, const OrbitSet& t) {
  OrbitSet out = s;
  out.unite(t);
  return out;
}

/// One concrete pair per orbit of S x T under the diagonal action.
inline std::vector<std::pair<Polynomial, Polynomial>> pairs(const OrbitSet& s, const OrbitSet& t) {
  if (!(s.structure() == t.structure())) throw InputError("orbit sets over different structures");
  std::vector<std::pair<Polynomial, Polynomial>> out;
  for (const Polynomial& p : s.reps()) {
    AtomTuple dp = p.dom();
    for (const Polynomial& q : t.reps()) {
      AtomTuple dq = q.dom();
      for (const auto& [t1, t2] : merge_reps(s.structure(), dp, dq)) {
        out.emplace_back(p.act(AtomMap(dp, t1)), q.act(AtomMap(dq, t2)));
      }
    }
  }
  return out;
}

/// Image of an orbit set under an equivariant map (applied to representatives).
inline OrbitSet map_equivariant(const OrbitSet& s, const Structure& target,
                                const std::function<std::vector<Polynomial>(const Polynomial&)>& f) {
  OrbitSet out(target);
  for (const Polynomial& p : s.reps()) {
    for (const Polynomial& image : f(p)) out.insert(image);
  }
  return out;
}

inline OrbitSet map_equivariant(const OrbitSet& s, const std::function<Polynomial(const Polynomial&)>& f) {
  return map_equivariant(s, s.structure(), [&f](const Polynomial& p) { return std::vector<Polynomial>{f(p)}; });
}

}  // namespace eqgb

#endif  // EQGB_ORBITSET_HPP
