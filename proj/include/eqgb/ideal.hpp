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

#ifndef EQGB_IDEAL_HPP
#define EQGB_IDEAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eqgb/basis.hpp"
#include "eqgb/orbitset.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/saturation.hpp"
#include "eqgb/structure.hpp"

namespace eqgb {

/// An orbit-finitely generated equivariant ideal, normalized at construction:
/// `basis` is an equivariant Gröbner basis over the ordered base structure.
/// For the equality-atoms reduct the generators are expanded into one
/// ordered orbit per linear order of their atoms.
class EquivariantIdeal {
 public:
  static EquivariantIdeal from_generators(const Structure& s, const std::vector<Polynomial>& gens,
                                          const SaturationOptions& options = {}) {
    OrbitSet surface(s);
    for (const Polynomial& g : gens) {
      require_in(s, g);
      surface.insert(g);
    }
    return from_base_generators(s, surface, expand(s, surface), options);
  }

  const Structure& structure() const { return structure_; }
  const Structure& base_structure() const { return basis_.structure(); }
  const OrbitSet& generators() const { return generators_; }
  const OrbitSet& base_generators() const { return base_generators_; }
  const OrbitSet& basis() const { return basis_; }

  bool member(const Polynomial& p, Certificate* certificate = nullptr) const {
    require_in(structure_, p);
    return eqgb::member(basis_, p, certificate);
  }

  /// J ⊆ this.
  bool includes(const EquivariantIdeal& j) const {
    require_same(j);
    for (const Polynomial& q : j.basis_.reps()) {
      if (!eqgb::member(basis_, q)) return false;
    }
    return true;
  }

  bool equals(const EquivariantIdeal& j) const { return includes(j) && j.includes(*this); }

  EquivariantIdeal sum(const EquivariantIdeal& j, const SaturationOptions& options = {}) const {
    require_same(j);
    OrbitSet gens = unite(generators_, j.generators_);
    OrbitSet base = unite(base_generators_, j.base_generators_);
    return from_base_generators(structure_, gens, base, options);
  }

  EquivariantIdeal product(const EquivariantIdeal& j, const SaturationOptions& options = {}) const {
    require_same(j);
    OrbitSet base(base_structure());
    for (const auto& [g, h] : pairs(base_generators_, j.base_generators_)) base.insert(g * h);
    return from_base_generators(structure_, base_as_surface(base), base, options);
  }

  /// Elimination of an indeterminate t placed above every atom: the ideal
  /// generated by t*I + (1 - t)*J, restricted to t-free representatives.
  EquivariantIdeal intersect(const EquivariantIdeal& j, const SaturationOptions& options = {}) const {
    require_same(j);
    const Structure& b = base_structure();
    Structure ext = Structure::sum(b, Structure::finite({"t"}));
    Atom t = Atom::right(ext.right().symbols()[0]);
    Polynomial pt = Polynomial::atom(t);
    Polynomial one_minus_t = Polynomial::constant(Rational(1)) - pt;
    OrbitSet gens(ext);
    for (const Polynomial& h : base_generators_.reps()) gens.insert(pt * lift_left(h));
    for (const Polynomial& h : j.base_generators_.reps()) gens.insert(one_minus_t * lift_left(h));
    OrbitSet extended = egb(gens, options);
    OrbitSet eliminated(b);
    for (const Polynomial& p : extended.reps()) {
      AtomTuple d = p.dom();
      if (std::find(d.begin(), d.end(), t) != d.end()) continue;
      eliminated.insert(strip_left(p));
    }
    EquivariantIdeal out(structure_);
    out.generators_ = base_as_surface(eliminated);
    out.base_generators_ = eliminated;
    out.basis_ = eliminated;
    return out;
  }

  /// Images of ordered-world polynomials as surface polynomials.
  OrbitSet base_as_surface(const OrbitSet& base) const {
    OrbitSet out(structure_);
    for (const Polynomial& p : base.reps()) out.insert(p);
    return out;
  }

 private:
  explicit EquivariantIdeal(const Structure& s)
      : structure_(s),
        generators_(s),
        base_generators_(s.computation_base()),
        basis_(s.computation_base()) {}

  static OrbitSet expand(const Structure& s, const OrbitSet& surface) {
    OrbitSet base(s.computation_base());
    for (const Polynomial& g : surface.reps()) {
      if (!s.is_reduct()) {
        base.insert(g);
        continue;
      }
      AtomTuple d = g.dom();
      for (const AtomTuple& t : reduct_expand(s, d)) base.insert(g.act(AtomMap(d, t)));
    }
    return base;
  }

  static EquivariantIdeal from_base_generators(const Structure& s, const OrbitSet& surface, const OrbitSet& base,
                                               const SaturationOptions& options) {
    EquivariantIdeal out(s);
    out.generators_ = surface;
    out.base_generators_ = base;
    out.basis_ = egb(base, options);
    return out;
  }

  static Polynomial lift_left(const Polynomial& p) {
    AtomMap m;
    for (const Atom& a : p.dom()) m.set(a, Atom::left(a));
    return p.act(m);
  }
  static Polynomial strip_left(const Polynomial& p) {
    AtomMap m;
    for (const Atom& a : p.dom()) m.set(a, a.inner());
    return p.act(m);
  }

  void require_same(const EquivariantIdeal& j) const {
    if (!(structure_ == j.structure_)) throw InputError("ideals over different structures");
  }

  Structure structure_;
  OrbitSet generators_;
  OrbitSet base_generators_;
  OrbitSet basis_;
};

inline EquivariantIdeal ideal_from_generators(const Structure& s, const std::vector<Polynomial>& gens,
                                              const SaturationOptions& options = {}) {
  return EquivariantIdeal::from_generators(s, gens, options);
}
inline bool ideal_member(const EquivariantIdeal& i, const Polynomial& p) { return i.member(p); }
inline bool ideal_includes(const EquivariantIdeal& i, const EquivariantIdeal& j) { return i.includes(j); }
inline bool ideal_equal(const EquivariantIdeal& i, const EquivariantIdeal& j) { return i.equals(j); }
inline EquivariantIdeal ideal_sum(const EquivariantIdeal& i, const EquivariantIdeal& j,
                                  const SaturationOptions& options = {}) {
  return i.sum(j, options);
}
inline EquivariantIdeal ideal_product(const EquivariantIdeal& i, const EquivariantIdeal& j,
                                      const SaturationOptions& options = {}) {
  return i.product(j, options);
}
inline EquivariantIdeal ideal_intersect(const EquivariantIdeal& i, const EquivariantIdeal& j,
                                        const SaturationOptions& options = {}) {
  return i.intersect(j, options);
}

}  // namespace eqgb

#endif  // EQGB_IDEAL_HPP
