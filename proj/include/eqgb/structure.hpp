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

#ifndef EQGB_STRUCTURE_HPP
#define EQGB_STRUCTURE_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqgb/atom.hpp"
#include "eqgb/errors.hpp"

namespace eqgb {

/// Descriptor of an ordered atom universe together with its group.
///
///   dense      the rationals under order-preserving bijections
///   finite     a finite ordered set with the trivial group
///   sum        lexicographic sum, left atoms below right atoms, groups act per side
///   lex        lexicographic product; every outer atom carries its own copy of the inner group
///   doubled    two ordered copies of a base universe, the base group acting diagonally
///   eqatoms    the rationals under all bijections; a reduct of `dense`, computed in `dense`
///
/// `eqatoms` only appears at the top level of a descriptor.
class Structure {
 public:
  enum class Kind { dense, finite, sum, lex, doubled, eqatoms };

  static Structure dense() { return Structure(std::make_shared<Node>(Node{Kind::dense})); }
  static Structure eqatoms() { return Structure(std::make_shared<Node>(Node{Kind::eqatoms})); }

  static Structure finite(const std::vector<std::string>& symbols) {
    Node node{Kind::finite};
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      const std::string& name = symbols[i];
      if (!valid_symbol(name)) throw InputError("invalid symbol name '" + name + "'");
      for (std::size_t j = 0; j < i; ++j) {
        if (symbols[j] == name) throw InputError("duplicate symbol '" + name + "'");
      }
      node.symbols.push_back(Atom::symbol(name, static_cast<int>(i)));
    }
    return Structure(std::make_shared<Node>(std::move(node)));
  }

  static Structure sum(const Structure& left, const Structure& right) {
    return composite(Kind::sum, left, &right);
  }
  static Structure lex(const Structure& outer, const Structure& inner) {
    return composite(Kind::lex, outer, &inner);
  }
  static Structure doubled(const Structure& base) { return composite(Kind::doubled, base, nullptr); }

  Kind kind() const { return node_->kind; }
  bool is_reduct() const { return kind() == Kind::eqatoms; }

  /// The ordered structure in which computations for this structure happen.
  Structure computation_base() const { return is_reduct() ? dense() : *this; }

  const Structure& left() const { return *node_->first; }
  const Structure& right() const { return *node_->second; }
  const Structure& outer() const { return *node_->first; }
  const Structure& inner() const { return *node_->second; }
  const Structure& base() const { return *node_->first; }
  const std::vector<Atom>& symbols() const { return node_->symbols; }

  std::optional<Atom> symbol(std::string_view name) const {
    for (const Atom& a : node_->symbols) {
      if (a.name() == name) return a;
    }
    return std::nullopt;
  }

  bool contains(const Atom& a) const {
    switch (kind()) {
      case Kind::dense:
      case Kind::eqatoms:
        return a.is_point();
      case Kind::finite:
        return a.is_symbol() && a.rank() >= 0 && static_cast<std::size_t>(a.rank()) < symbols().size() &&
               symbols()[static_cast<std::size_t>(a.rank())] == a;
      case Kind::sum:
        return a.is_side() && (a.side_tag() == Atom::Side::left ? left() : right()).contains(a.inner());
      case Kind::lex:
        return a.is_pair() && outer().contains(a.outer()) && inner().contains(a.second_coordinate());
      case Kind::doubled:
        return a.is_copy() && base().contains(a.inner());
    }
    return false;
  }

  void require(const Atom& a) const {
    if (!contains(a)) throw InputError("atom " + a.to_string() + " is not in universe " + to_string());
  }

  std::string to_string() const {
    switch (kind()) {
      case Kind::dense:
        return "Q";
      case Kind::eqatoms:
        return "eqatoms";
      case Kind::finite: {
        std::string out = "finite(";
        for (std::size_t i = 0; i < symbols().size(); ++i) {
          if (i) out += ",";
          out += symbols()[i].name();
        }
        return out + ")";
      }
      case Kind::sum:
        return "sum(" + left().to_string() + "," + right().to_string() + ")";
      case Kind::lex:
        return "lex(" + outer().to_string() + "," + inner().to_string() + ")";
      case Kind::doubled:
        return "doubled(" + base().to_string() + ")";
    }
    return {};
  }

  friend bool operator==(const Structure& x, const Structure& y) {
    return x.node_ == y.node_ || x.to_string() == y.to_string();
  }

  static bool valid_symbol(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Structure> first;
    std::shared_ptr<const Structure> second;
    std::vector<Atom> symbols;
  };

  static Structure composite(Kind kind, const Structure& a, const Structure* b) {
    if (a.is_reduct() || (b && b->is_reduct())) {
      throw InputError("eqatoms may only appear at the top level of a structure");
    }
    Node node{kind};
    node.first = std::make_shared<const Structure>(a);
    if (b) node.second = std::make_shared<const Structure>(*b);
    return Structure(std::make_shared<Node>(std::move(node)));
  }

  explicit Structure(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A finite partial map between atoms; the restriction of a group element
/// whenever it comes out of `embeddings`, `placements` or canonicalization.
class AtomMap {
 public:
  using value_type = std::pair<Atom, Atom>;

  AtomMap() = default;
  AtomMap(std::initializer_list<value_type> entries) {
    for (const auto& [from, to] : entries) set(from, to);
  }
  /// Zips two aligned tuples; `from` must be duplicate-free.
  AtomMap(const AtomTuple& from, const AtomTuple& to) {
    if (from.size() != to.size()) throw InputError("atom map from tuples of different lengths");
    for (std::size_t i = 0; i < from.size(); ++i) set(from[i], to[i]);
  }

  void set(const Atom& from, const Atom& to) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), from,
                               [](const value_type& e, const Atom& key) { return e.first < key; });
    if (it != entries_.end() && it->first == from) {
      it->second = to;
    } else {
      entries_.insert(it, {from, to});
    }
  }

  const Atom* find(const Atom& from) const {
    for (const auto& e : entries_) {
      if (e.first == from) return &e.second;
    }
    return nullptr;
  }
  bool contains(const Atom& from) const { return find(from) != nullptr; }
  const Atom& at(const Atom& from) const {
    const Atom* to = find(from);
    if (!to) throw InputError("atom map undefined on " + from.to_string());
    return *to;
  }

  AtomTuple apply(const AtomTuple& t) const {
    AtomTuple out;
    out.reserve(t.size());
    for (const Atom& a : t) out.push_back(at(a));
    return out;
  }

  AtomMap inverse() const {
    AtomMap out;
    for (const auto& [from, to] : entries_) out.set(to, from);
    return out;
  }

  /// Composition `other ∘ this`.
  AtomMap then(const AtomMap& other) const {
    AtomMap out;
    for (const auto& [from, to] : entries_) out.set(from, other.at(to));
    return out;
  }

  bool is_identity() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const value_type& e) { return e.first == e.second; });
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const AtomMap&, const AtomMap&) = default;

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ", ";
      out += entries_[i].first.to_string() + "->" + entries_[i].second.to_string();
    }
    return out + "}";
  }

 private:
  std::vector<value_type> entries_;  // sorted by source atom
};

enum class Ordering { less, equal, greater };

inline AtomTuple sorted_distinct(AtomTuple t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

namespace detail {

inline Rational dyadic_step(const Rational& lo, const Rational& hi, std::size_t count) {
  long denom = 1;
  while (static_cast<std::size_t>(denom) <= count) denom *= 2;
  return (hi - lo) / Rational(denom);
}

/// Synthesizes `count` increasing rationals in the gap (lo, hi); either bound may be absent.
inline std::vector<Rational> fresh_points(const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                                          std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    long jj = static_cast<long>(j);
    long c = static_cast<long>(count);
    if (!lo && !hi) {
      out.emplace_back(jj + 1);
    } else if (!lo) {
      out.push_back(*hi - Rational(c - jj));
    } else if (!hi) {
      out.push_back(*lo + Rational(jj + 1));
    } else {
      out.push_back(*lo + dyadic_step(*lo, *hi, count) * Rational(jj + 1));
    }
  }
  return out;
}

/// Splits a side-tagged list into (left payloads, left positions, right payloads, right positions).
struct SideSplit {
  AtomTuple left, right;
  std::vector<std::size_t> left_pos, right_pos;
};

inline SideSplit split_sides(const AtomTuple& t) {
  SideSplit s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].side_tag() == Atom::Side::left) {
      s.left.push_back(t[i].inner());
      s.left_pos.push_back(i);
    } else {
      s.right.push_back(t[i].inner());
      s.right_pos.push_back(i);
    }
  }
  return s;
}

/// One product factor: candidate image tuples for a fixed subset of positions.
struct Factor {
  std::vector<std::size_t> positions;
  std::vector<AtomTuple> options;
};

inline std::vector<AtomTuple> cartesian(const std::vector<Factor>& factors, std::size_t width) {
  std::vector<AtomTuple> out;
  for (const Factor& f : factors) {
    if (f.options.empty()) return out;
  }
  AtomTuple current(width);
  std::vector<std::size_t> choice(factors.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const AtomTuple& opt = factors[k].options[choice[k]];
      for (std::size_t j = 0; j < opt.size(); ++j) current[factors[k].positions[j]] = opt[j];
    }
    out.push_back(current);
    std::size_t k = factors.size();
    while (k > 0) {
      --k;
      if (++choice[k] < factors[k].options.size()) break;
      choice[k] = 0;
      if (k == 0) return out;
    }
    if (factors.empty()) return out;
  }
}

/// Groups lex pairs by outer coordinate: distinct outer values (sorted) and, per
/// outer value, the inner payloads with their positions in the input.
struct LexGroups {
  AtomTuple outers;
  std::vector<AtomTuple> inners;
  std::vector<std::vector<std::size_t>> positions;
};

inline LexGroups group_lex(const AtomTuple& sorted) {
  LexGroups g;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Atom o = sorted[i].outer();
    auto it = std::find(g.outers.begin(), g.outers.end(), o);
    std::size_t idx;
    if (it == g.outers.end()) {
      g.outers.push_back(o);
      g.inners.emplace_back();
      g.positions.emplace_back();
      idx = g.outers.size() - 1;
    } else {
      idx = static_cast<std::size_t>(it - g.outers.begin());
    }
    g.inners[idx].push_back(sorted[i].second_coordinate());
    g.positions[idx].push_back(i);
  }
  return g;
}

inline AtomTuple bases_of(const AtomTuple& t) {
  AtomTuple out;
  out.reserve(t.size());
  for (const Atom& a : t) out.push_back(a.inner());
  return sorted_distinct(std::move(out));
}

inline std::size_t index_of(const AtomTuple& t, const Atom& a) {
  return static_cast<std::size_t>(std::find(t.begin(), t.end(), a) - t.begin());
}

}  // namespace detail

/// Canonical orbit representative of a sorted duplicate-free atom list, as the
/// aligned list of images under a group element. For ordered structures the
/// renaming is monotone, hence the unique group-realizable bijection.
inline AtomTuple canonical_image(const Structure& s, const AtomTuple& sorted) {
  using K = Structure::Kind;
  AtomTuple out(sorted.size());
  switch (s.kind()) {
    case K::dense:
    case K::eqatoms:
      for (std::size_t i = 0; i < sorted.size(); ++i) out[i] = Atom::point(static_cast<long>(i + 1));
      return out;
    case K::finite:
      return sorted;
    case K::sum: {
      auto split = detail::split_sides(sorted);
      AtomTuple l = canonical_image(s.left(), split.left);
      AtomTuple r = canonical_image(s.right(), split.right);
      for (std::size_t i = 0; i < l.size(); ++i) out[split.left_pos[i]] = Atom::left(l[i]);
      for (std::size_t i = 0; i < r.size(); ++i) out[split.right_pos[i]] = Atom::right(r[i]);
      return out;
    }
    case K::lex: {
      auto groups = detail::group_lex(sorted);
      AtomTuple outers = canonical_image(s.outer(), groups.outers);
      for (std::size_t g = 0; g < groups.outers.size(); ++g) {
        AtomTuple inners = canonical_image(s.inner(), groups.inners[g]);
        for (std::size_t j = 0; j < inners.size(); ++j) {
          out[groups.positions[g][j]] = Atom::pair(outers[g], inners[j]);
        }
      }
      return out;
    }
    case K::doubled: {
      AtomTuple bases = detail::bases_of(sorted);
      AtomTuple images = canonical_image(s.base(), bases);
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        out[i] = Atom::copy(sorted[i].copy_tag(), images[detail::index_of(bases, sorted[i].inner())]);
      }
      return out;
    }
  }
  return out;
}

/// The renaming sending the atoms of `atoms` to their canonical representative.
inline AtomMap canonical_renaming(const Structure& s, const AtomTuple& atoms) {
  AtomTuple sorted = sorted_distinct(atoms);
  return AtomMap(sorted, canonical_image(s, sorted));
}

/// Canonical representative of the orbit of a tuple.
inline AtomTuple canonical_tuple(const Structure& s, const AtomTuple& t) {
  for (const Atom& a : t) s.require(a);
  if (s.is_reduct()) {
    // Equality pattern only: number atoms by first occurrence.
    AtomTuple seen, out;
    for (const Atom& a : t) {
      std::size_t idx = detail::index_of(seen, a);
      if (idx == seen.size()) seen.push_back(a);
      out.push_back(Atom::point(static_cast<long>(idx + 1)));
    }
    return out;
  }
  return canonical_renaming(s, t).apply(t);
}

inline Ordering compare(const Structure& s, const Atom& a, const Atom& b) {
  s.require(a);
  s.require(b);
  auto c = a <=> b;
  return c < 0 ? Ordering::less : (c > 0 ? Ordering::greater : Ordering::equal);
}

inline bool orbit_equal(const Structure& s, const AtomTuple& t1, const AtomTuple& t2) {
  if (t1.size() != t2.size()) throw InputError("orbit_equal on tuples of different lengths");
  return canonical_tuple(s, t1) == canonical_tuple(s, t2);
}

/// One representative per orbit of single atoms.
inline AtomTuple single_reps(const Structure& s) {
  using K = Structure::Kind;
  AtomTuple out;
  switch (s.kind()) {
    case K::dense:
    case K::eqatoms:
      out.push_back(Atom::point(1));
      break;
    case K::finite:
      out = s.symbols();
      break;
    case K::sum:
      for (const Atom& a : single_reps(s.left())) out.push_back(Atom::left(a));
      for (const Atom& a : single_reps(s.right())) out.push_back(Atom::right(a));
      break;
    case K::lex:
      for (const Atom& o : single_reps(s.outer())) {
        for (const Atom& i : single_reps(s.inner())) out.push_back(Atom::pair(o, i));
      }
      break;
    case K::doubled:
      for (const Atom& b : single_reps(s.base())) out.push_back(Atom::first(b));
      for (const Atom& b : single_reps(s.base())) out.push_back(Atom::second(b));
      break;
  }
  return out;
}

/// Relative placements: for sorted duplicate-free `pinned` and `moving`, one
/// image tuple (aligned to `moving`) per orbit, under the pointwise stabilizer
/// of `pinned`, of the images of `moving` under the group. Images are pinned
/// atoms or synthesized fresh atoms.
inline std::vector<AtomTuple> amalgam_images(const Structure& s, const AtomTuple& pinned, const AtomTuple& moving) {
  using K = Structure::Kind;
  std::vector<AtomTuple> out;
  switch (s.kind()) {
    case K::dense: {
      // Slots 0..2n: even slots are gaps, odd slot 2i+1 is pinned[i].
      const std::size_t n = pinned.size();
      const std::size_t slots = 2 * n + 1;
      std::vector<std::size_t> assign(moving.size());
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t min_slot) {
        if (idx == moving.size()) {
          AtomTuple img(moving.size());
          std::size_t i = 0;
          while (i < moving.size()) {
            std::size_t slot = assign[i];
            if (slot % 2 == 1) {
              img[i] = pinned[slot / 2];
              ++i;
              continue;
            }
            std::size_t j = i;
            while (j < moving.size() && assign[j] == slot) ++j;
            std::size_t gap = slot / 2;
            std::optional<Rational> lo, hi;
            if (gap > 0) lo = pinned[gap - 1].value();
            if (gap < n) hi = pinned[gap].value();
            auto pts = detail::fresh_points(lo, hi, j - i);
            for (std::size_t k = i; k < j; ++k) img[k] = Atom::point(pts[k - i]);
            i = j;
          }
          out.push_back(std::move(img));
          return;
        }
        for (std::size_t slot = min_slot; slot < slots; ++slot) {
          assign[idx] = slot;
          rec(idx + 1, slot % 2 == 1 ? slot + 1 : slot);
        }
      };
      rec(0, 0);
      return out;
    }
    case K::eqatoms: {
      Rational top(0);
      for (const Atom& p : pinned) top = std::max(top, p.value());
      std::vector<bool> used(pinned.size(), false);
      AtomTuple img(moving.size());
      std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long fresh) {
        if (idx == moving.size()) {
          out.push_back(img);
          return;
        }
        for (std::size_t k = 0; k < pinned.size(); ++k) {
          if (used[k]) continue;
          used[k] = true;
          img[idx] = pinned[k];
          rec(idx + 1, fresh);
          used[k] = false;
        }
        img[idx] = Atom::point(top + Rational(fresh));
        rec(idx + 1, fresh + 1);
      };
      rec(0, 1);
      return out;
    }
    case K::finite:
      out.push_back(moving);
      return out;
    case K::sum: {
      auto p = detail::split_sides(pinned);
      auto m = detail::split_sides(moving);
      std::vector<detail::Factor> factors(2);
      factors[0].positions = m.left_pos;
      for (auto& img : amalgam_images(s.left(), p.left, m.left)) {
        for (Atom& a : img) a = Atom::left(a);
        factors[0].options.push_back(std::move(img));
      }
      factors[1].positions = m.right_pos;
      for (auto& img : amalgam_images(s.right(), p.right, m.right)) {
        for (Atom& a : img) a = Atom::right(a);
        factors[1].options.push_back(std::move(img));
      }
      return detail::cartesian(factors, moving.size());
    }
    case K::lex: {
      auto pg = detail::group_lex(pinned);
      auto mg = detail::group_lex(moving);
      for (const AtomTuple& outer_img : amalgam_images(s.outer(), pg.outers, mg.outers)) {
        std::vector<detail::Factor> factors;
        for (std::size_t g = 0; g < mg.outers.size(); ++g) {
          detail::Factor f;
          f.positions = mg.positions[g];
          std::size_t pidx = detail::index_of(pg.outers, outer_img[g]);
          AtomTuple pinned_inner = pidx < pg.outers.size() ? pg.inners[pidx] : AtomTuple{};
          for (auto& img : amalgam_images(s.inner(), pinned_inner, mg.inners[g])) {
            for (Atom& a : img) a = Atom::pair(outer_img[g], a);
            f.options.push_back(std::move(img));
          }
          factors.push_back(std::move(f));
        }
        auto part = detail::cartesian(factors, moving.size());
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case K::doubled: {
      AtomTuple pb = detail::bases_of(pinned);
      AtomTuple mb = detail::bases_of(moving);
      for (const AtomTuple& base_img : amalgam_images(s.base(), pb, mb)) {
        AtomTuple img(moving.size());
        for (std::size_t i = 0; i < moving.size(); ++i) {
          img[i] = Atom::copy(moving[i].copy_tag(), base_img[detail::index_of(mb, moving[i].inner())]);
        }
        out.push_back(std::move(img));
      }
      return out;
    }
  }
  return out;
}

/// Placements of `moving` relative to the pointwise-fixed `pinned`: one map per
/// orbit under the stabilizer of `pinned`.
inline std::vector<AtomMap> placements(const Structure& s, const AtomTuple& moving, const AtomTuple& pinned) {
  for (const Atom& a : moving) s.require(a);
  for (const Atom& a : pinned) s.require(a);
  AtomTuple p = sorted_distinct(pinned);
  if (p.size() != pinned.size()) throw InputError("placements: pinned atoms must be distinct");
  AtomTuple m = sorted_distinct(moving);
  std::vector<AtomMap> out;
  for (const AtomTuple& img : amalgam_images(s, p, m)) out.emplace_back(m, img);
  return out;
}

namespace detail {
inline bool tuple_less(const AtomTuple& x, const AtomTuple& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}
struct TupleLess {
  bool operator()(const AtomTuple& x, const AtomTuple& y) const { return tuple_less(x, y); }
};
struct TuplePairLess {
  bool operator()(const std::pair<AtomTuple, AtomTuple>& x, const std::pair<AtomTuple, AtomTuple>& y) const {
    if (tuple_less(x.first, y.first)) return true;
    if (tuple_less(y.first, x.first)) return false;
    return tuple_less(x.second, y.second);
  }
};
}  // namespace detail

/// One canonical tuple per orbit of X^n, sorted lexicographically.
inline std::vector<AtomTuple> tuple_reps(const Structure& s, std::size_t n) {
  std::set<AtomTuple, detail::TupleLess> reps{AtomTuple{}};
  AtomTuple singles = single_reps(s);
  for (std::size_t k = 0; k < n; ++k) {
    std::set<AtomTuple, detail::TupleLess> next;
    for (const AtomTuple& r : reps) {
      AtomTuple pinned = sorted_distinct(r);
      for (const Atom& u : singles) {
        for (const AtomTuple& img : amalgam_images(s, pinned, AtomTuple{u})) {
          AtomTuple t = r;
          t.push_back(img[0]);
          next.insert(canonical_tuple(s, t));
        }
      }
    }
    reps = std::move(next);
  }
  return {reps.begin(), reps.end()};
}

/// One concrete pair per orbit of orbit(t1) x orbit(t2) under the diagonal
/// action; each pair is the canonical form of the concatenated tuple.
inline std::vector<std::pair<AtomTuple, AtomTuple>> merge_reps(const Structure& s, const AtomTuple& t1,
                                                                const AtomTuple& t2) {
  AtomTuple c1 = canonical_tuple(s, t1);
  for (const Atom& a : t2) s.require(a);
  AtomTuple pinned = sorted_distinct(c1);
  AtomTuple moving = sorted_distinct(t2);
  std::set<std::pair<AtomTuple, AtomTuple>, detail::TuplePairLess> out;
  for (const AtomTuple& img : amalgam_images(s, pinned, moving)) {
    AtomMap mu(moving, img);
    AtomTuple joined = c1;
    for (const Atom& a : t2) joined.push_back(mu.at(a));
    AtomTuple canon = canonical_tuple(s, joined);
    out.emplace(AtomTuple(canon.begin(), canon.begin() + static_cast<std::ptrdiff_t>(t1.size())),
                AtomTuple(canon.begin() + static_cast<std::ptrdiff_t>(t1.size()), canon.end()));
  }
  return {out.begin(), out.end()};
}

/// Image tuples of group-realizable injections of sorted `source` into sorted `target`.
inline std::vector<AtomTuple> embedding_images(const Structure& s, const AtomTuple& source, const AtomTuple& target) {
  using K = Structure::Kind;
  std::vector<AtomTuple> out;
  if (source.size() > target.size()) return out;
  switch (s.kind()) {
    case K::dense: {
      AtomTuple img(source.size());
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t from) {
        if (idx == source.size()) {
          out.push_back(img);
          return;
        }
        for (std::size_t j = from; j + (source.size() - idx) <= target.size(); ++j) {
          img[idx] = target[j];
          rec(idx + 1, j + 1);
        }
      };
      rec(0, 0);
      return out;
    }
    case K::eqatoms: {
      AtomTuple img(source.size());
      std::vector<bool> used(target.size(), false);
      std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == source.size()) {
          out.push_back(img);
          return;
        }
        for (std::size_t j = 0; j < target.size(); ++j) {
          if (used[j]) continue;
          used[j] = true;
          img[idx] = target[j];
          rec(idx + 1);
          used[j] = false;
        }
      };
      rec(0);
      return out;
    }
    case K::finite:
      if (std::includes(target.begin(), target.end(), source.begin(), source.end())) out.push_back(source);
      return out;
    case K::sum: {
      auto src = detail::split_sides(source);
      auto tgt = detail::split_sides(target);
      std::vector<detail::Factor> factors(2);
      factors[0].positions = src.left_pos;
      for (auto& img : embedding_images(s.left(), src.left, tgt.left)) {
        for (Atom& a : img) a = Atom::left(a);
        factors[0].options.push_back(std::move(img));
      }
      factors[1].positions = src.right_pos;
      for (auto& img : embedding_images(s.right(), src.right, tgt.right)) {
        for (Atom& a : img) a = Atom::right(a);
        factors[1].options.push_back(std::move(img));
      }
      return detail::cartesian(factors, source.size());
    }
    case K::lex: {
      auto sg = detail::group_lex(source);
      auto tg = detail::group_lex(target);
      for (const AtomTuple& outer_img : embedding_images(s.outer(), sg.outers, tg.outers)) {
        std::vector<detail::Factor> factors;
        for (std::size_t g = 0; g < sg.outers.size(); ++g) {
          detail::Factor f;
          f.positions = sg.positions[g];
          const AtomTuple& tinner = tg.inners[detail::index_of(tg.outers, outer_img[g])];
          for (auto& img : embedding_images(s.inner(), sg.inners[g], tinner)) {
            for (Atom& a : img) a = Atom::pair(outer_img[g], a);
            f.options.push_back(std::move(img));
          }
          factors.push_back(std::move(f));
        }
        auto part = detail::cartesian(factors, source.size());
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case K::doubled: {
      AtomTuple sb = detail::bases_of(source);
      AtomTuple tb = detail::bases_of(target);
      for (const AtomTuple& base_img : embedding_images(s.base(), sb, tb)) {
        AtomTuple img(source.size());
        bool ok = true;
        for (std::size_t i = 0; i < source.size() && ok; ++i) {
          Atom a = Atom::copy(source[i].copy_tag(), base_img[detail::index_of(sb, source[i].inner())]);
          ok = std::binary_search(target.begin(), target.end(), a);
          img[i] = a;
        }
        if (ok) out.push_back(std::move(img));
      }
      return out;
    }
  }
  return out;
}

/// The assignment x -> y respects the one-point type of x.
inline bool unary_compatible(const Structure& s, const Atom& x, const Atom& y) {
  using K = Structure::Kind;
  switch (s.kind()) {
    case K::dense:
    case K::eqatoms:
      return y.is_point();
    case K::finite:
      return x == y;
    case K::sum:
      return y.is_side() && x.side_tag() == y.side_tag() &&
             unary_compatible(x.side_tag() == Atom::Side::left ? s.left() : s.right(), x.inner(), y.inner());
    case K::lex:
      return y.is_pair() && unary_compatible(s.outer(), x.outer(), y.outer()) &&
             unary_compatible(s.inner(), x.second_coordinate(), y.second_coordinate());
    case K::doubled:
      return y.is_copy() && x.copy_tag() == y.copy_tag() && unary_compatible(s.base(), x.inner(), y.inner());
  }
  return false;
}

/// A label of the one-point orbit of x: unary_compatible(s, x, y) holds
/// exactly when both atoms get the same key.
inline Atom unary_key(const Structure& s, const Atom& x) {
  using K = Structure::Kind;
  switch (s.kind()) {
    case K::dense:
    case K::eqatoms:
      return Atom::point(1);
    case K::finite:
      return x;
    case K::sum:
      return x.side_tag() == Atom::Side::left ? Atom::left(unary_key(s.left(), x.inner()))
                                              : Atom::right(unary_key(s.right(), x.inner()));
    case K::lex:
      return Atom::pair(unary_key(s.outer(), x.outer()), unary_key(s.inner(), x.second_coordinate()));
    case K::doubled:
      return x.copy_tag() == Atom::Copy::first ? Atom::first(unary_key(s.base(), x.inner()))
                                               : Atom::second(unary_key(s.base(), x.inner()));
  }
  return x;
}

/// The assignment {x1 -> y1, x2 -> y2} respects the two-point type of (x1, x2).
/// Every implemented structure is homogeneous in a language of unary and
/// binary relations, so a finite map extends to a group element exactly when
/// all its one- and two-point restrictions are compatible.
inline bool pair_compatible(const Structure& s, const Atom& x1, const Atom& x2, const Atom& y1, const Atom& y2) {
  using K = Structure::Kind;
  switch (s.kind()) {
    case K::dense:
      return (x1 <=> x2) == (y1 <=> y2);
    case K::eqatoms:
      return (x1 == x2) == (y1 == y2);
    case K::finite:
      return true;
    case K::sum:
      if (x1.side_tag() != x2.side_tag()) return true;
      return pair_compatible(x1.side_tag() == Atom::Side::left ? s.left() : s.right(), x1.inner(), x2.inner(),
                             y1.inner(), y2.inner());
    case K::lex:
      if (!pair_compatible(s.outer(), x1.outer(), x2.outer(), y1.outer(), y2.outer())) return false;
      if (!(x1.outer() == x2.outer())) return true;
      return pair_compatible(s.inner(), x1.second_coordinate(), x2.second_coordinate(), y1.second_coordinate(),
                             y2.second_coordinate());
    case K::doubled:
      return pair_compatible(s.base(), x1.inner(), x2.inner(), y1.inner(), y2.inner());
  }
  return false;
}

/// Backtracking over injective, group-extendable maps sending source[i] to
/// one of options[i]. `visit(image)` returns false to stop the search; the
/// function returns false iff the search was stopped.
template <class Visit>
bool search_extendable(const Structure& s, const AtomTuple& source, const std::vector<AtomTuple>& options,
                       Visit&& visit) {
  AtomTuple image(source.size());
  auto rec = [&](auto& self, std::size_t i) -> bool {
    if (i == source.size()) return visit(const_cast<const AtomTuple&>(image));
    for (const Atom& y : options[i]) {
      if (!unary_compatible(s, source[i], y)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = !(image[j] == y) && pair_compatible(s, source[j], source[i], image[j], y);
      }
      if (!ok) continue;
      image[i] = y;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

/// All injections of `source` into `target` that extend to a group element.
inline std::vector<AtomMap> embeddings(const Structure& s, const AtomTuple& source, const AtomTuple& target) {
  AtomTuple src = sorted_distinct(source);
  if (src.size() != source.size()) throw InputError("embeddings: source atoms must be distinct");
  for (const Atom& a : src) s.require(a);
  AtomTuple tgt = sorted_distinct(target);
  for (const Atom& a : tgt) s.require(a);
  std::vector<AtomMap> out;
  for (const AtomTuple& img : embedding_images(s, src, tgt)) out.emplace_back(src, img);
  return out;
}

/// For the equality-atoms reduct: one dense-order representative per dense
/// orbit contained in the (larger) orbit of `atoms`.
inline std::vector<AtomTuple> reduct_expand(const Structure& s, const AtomTuple& atoms) {
  if (!s.is_reduct()) throw InputError("reduct_expand requires eqatoms");
  AtomTuple distinct;
  for (const Atom& a : atoms) {
    s.require(a);
    if (std::find(distinct.begin(), distinct.end(), a) == distinct.end()) distinct.push_back(a);
  }
  std::vector<long> ranks(distinct.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = static_cast<long>(i + 1);
  std::set<AtomTuple, detail::TupleLess> out;
  do {
    AtomMap m;
    for (std::size_t i = 0; i < distinct.size(); ++i) m.set(distinct[i], Atom::point(ranks[i]));
    out.insert(m.apply(atoms));
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return {out.begin(), out.end()};
}

}  // namespace eqgb

#endif  // EQGB_STRUCTURE_HPP
