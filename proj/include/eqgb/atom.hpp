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

#ifndef EQGB_ATOM_HPP
#define EQGB_ATOM_HPP

#include <array>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eqgb/rational.hpp"

namespace eqgb {

namespace detail {

enum class AtomKind : std::uint8_t { point, symbol, side, pair, copy };

struct AtomNode {
  AtomKind kind;
  std::uint8_t tag = 0;  // side: 0 = L, 1 = R; copy: 0 = first, 1 = second
  int rank = 0;          // symbol rank inside its finite universe
  Rational value;        // point
  std::string name;      // symbol
  const AtomNode* a = nullptr;
  const AtomNode* b = nullptr;
  std::size_t hash = 0;
  /// Packed order key, 0 when unavailable. Nonzero keys order like the atoms
  /// themselves (ties need the structural comparison).
  std::uint64_t order_key = 0;
};

inline std::uint64_t node_order_key(const AtomNode& n) {
  auto level = [](AtomKind k, std::uint8_t tag) {
    return static_cast<std::uint64_t>(((static_cast<unsigned>(k) + 1) << 2) | tag) << 56;
  };
  switch (n.kind) {
    case AtomKind::point: {
      auto v = n.value.to_long();
      if (!v || *v < 0 || *v > 65535) return 0;
      return level(n.kind, 0) | (static_cast<std::uint64_t>(*v) << 40);
    }
    case AtomKind::symbol:
      if (n.rank < -1 || n.rank > 65534) return 0;
      return level(n.kind, 0) | (static_cast<std::uint64_t>(n.rank + 1) << 40);
    case AtomKind::side:
    case AtomKind::copy: {
      std::uint64_t k = n.a->order_key;
      if (k == 0 || (k & 0xff) != 0) return 0;
      return level(n.kind, n.tag) | (k >> 8);
    }
    case AtomKind::pair:
      return 0;
  }
  return 0;
}

inline std::size_t node_hash(const AtomNode& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  mix(n.tag);
  mix(static_cast<std::size_t>(n.rank));
  mix(n.value.hash());
  mix(std::hash<std::string>{}(n.name));
  mix(reinterpret_cast<std::uintptr_t>(n.a));
  mix(reinterpret_cast<std::uintptr_t>(n.b));
  return h;
}

inline bool node_equal(const AtomNode& x, const AtomNode& y) {
  return x.kind == y.kind && x.tag == y.tag && x.rank == y.rank && x.a == y.a && x.b == y.b &&
         x.name == y.name && x.value == y.value;
}

/// Process-wide hash-consing of atoms. Interned nodes are never freed, so an
/// Atom is a plain pointer and equality is pointer equality.
class AtomTable {
 public:
  static AtomTable& instance() {
    static AtomTable table;
    return table;
  }

  const AtomNode* intern(AtomNode proto) {
    proto.hash = node_hash(proto);
    proto.order_key = node_order_key(proto);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = index_.find(&proto);
    if (it != index_.end()) return *it;
    nodes_.push_back(std::move(proto));
    const AtomNode* node = &nodes_.back();
    index_.insert(node);
    return node;
  }

  const AtomNode* small_point(long v) {
    auto& slot = small_points_[static_cast<std::size_t>(v)];
    const AtomNode* cached = slot.load(std::memory_order_acquire);
    if (cached) return cached;
    AtomNode proto{AtomKind::point};
    proto.value = Rational(v);
    cached = intern(std::move(proto));
    slot.store(cached, std::memory_order_release);
    return cached;
  }

  static constexpr long kSmallPoints = 4096;

 private:
  struct Hash {
    std::size_t operator()(const AtomNode* n) const { return n->hash; }
  };
  struct Equal {
    bool operator()(const AtomNode* x, const AtomNode* y) const { return node_equal(*x, *y); }
  };

  std::mutex mutex_;
  std::deque<AtomNode> nodes_;
  std::unordered_set<const AtomNode*, Hash, Equal> index_;
  std::array<std::atomic<const AtomNode*>, kSmallPoints> small_points_{};
};

struct CompositeKey {
  AtomKind kind;
  std::uint8_t tag;
  const AtomNode* a;
  const AtomNode* b;
  friend bool operator==(const CompositeKey&, const CompositeKey&) = default;
};

struct CompositeKeyHash {
  std::size_t operator()(const CompositeKey& k) const {
    std::size_t h = std::hash<const void*>{}(k.a) * 0x9e3779b97f4a7c15ull;
    h ^= std::hash<const void*>{}(k.b) + 0x7f4a7c15ull + (h << 6) + (h >> 2);
    return h ^ (static_cast<std::size_t>(k.kind) << 8 | k.tag);
  }
};

/// Interns a side, pair or copy node, consulting a per-thread cache first so
/// that the hot path takes no lock.
inline const AtomNode* composite(AtomKind kind, std::uint8_t tag, const AtomNode* a, const AtomNode* b) {
  thread_local std::unordered_map<CompositeKey, const AtomNode*, CompositeKeyHash> cache;
  CompositeKey key{kind, tag, a, b};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  AtomNode proto{kind};
  proto.tag = tag;
  proto.a = a;
  proto.b = b;
  const AtomNode* node = AtomTable::instance().intern(std::move(proto));
  cache.emplace(key, node);
  return node;
}

inline int compare_nodes(const AtomNode* x, const AtomNode* y) {
  while (true) {
    if (x == y) return 0;
    if (x->order_key && y->order_key && x->order_key != y->order_key) return x->order_key < y->order_key ? -1 : 1;
    if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
    switch (x->kind) {
      case AtomKind::point: {
        auto c = x->value <=> y->value;
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
      }
      case AtomKind::symbol:
        if (x->rank != y->rank) return x->rank < y->rank ? -1 : 1;
        return x->name.compare(y->name) < 0 ? -1 : (x->name == y->name ? 0 : 1);
      case AtomKind::side:
      case AtomKind::copy:
        if (x->tag != y->tag) return x->tag < y->tag ? -1 : 1;
        x = x->a;
        y = y->a;
        continue;
      case AtomKind::pair: {
        int c = compare_nodes(x->a, y->a);
        if (c != 0) return c;
        x = x->b;
        y = y->b;
        continue;
      }
    }
    return 0;
  }
}

}  // namespace detail

/// An indeterminate. Atoms are immutable interned values; the order between
/// two atoms of the same universe is the universe's total order:
///   points by rational value, symbols by declared rank, sum atoms L before R,
///   lex pairs lexicographically, copies first before second.
class Atom {
 public:
  using Kind = detail::AtomKind;
  enum class Side : std::uint8_t { left = 0, right = 1 };
  enum class Copy : std::uint8_t { first = 0, second = 1 };

  Atom() : node_(detail::AtomTable::instance().small_point(0)) {}

  static Atom point(long v) {
    if (v >= 0 && v < detail::AtomTable::kSmallPoints) return Atom(detail::AtomTable::instance().small_point(v));
    return point(Rational(v));
  }
  static Atom point(const Rational& q) {
    auto v = q.to_long();
    if (v && *v >= 0 && *v < detail::AtomTable::kSmallPoints) {
      return Atom(detail::AtomTable::instance().small_point(*v));
    }
    detail::AtomNode proto{Kind::point};
    proto.value = q;
    return Atom(detail::AtomTable::instance().intern(std::move(proto)));
  }
  static Atom symbol(std::string name, int rank) {
    detail::AtomNode proto{Kind::symbol};
    proto.rank = rank;
    proto.name = std::move(name);
    return Atom(detail::AtomTable::instance().intern(std::move(proto)));
  }
  static Atom side(Side s, const Atom& inner) {
    return Atom(detail::composite(Kind::side, static_cast<std::uint8_t>(s), inner.node_, nullptr));
  }
  static Atom left(const Atom& inner) { return side(Side::left, inner); }
  static Atom right(const Atom& inner) { return side(Side::right, inner); }
  static Atom pair(const Atom& outer, const Atom& inner) {
    return Atom(detail::composite(Kind::pair, 0, outer.node_, inner.node_));
  }
  static Atom copy(Copy c, const Atom& base) {
    return Atom(detail::composite(Kind::copy, static_cast<std::uint8_t>(c), base.node_, nullptr));
  }
  static Atom first(const Atom& base) { return copy(Copy::first, base); }
  static Atom second(const Atom& base) { return copy(Copy::second, base); }

  Kind kind() const { return node_->kind; }
  bool is_point() const { return kind() == Kind::point; }
  bool is_symbol() const { return kind() == Kind::symbol; }
  bool is_side() const { return kind() == Kind::side; }
  bool is_pair() const { return kind() == Kind::pair; }
  bool is_copy() const { return kind() == Kind::copy; }

  const Rational& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  int rank() const { return node_->rank; }
  Side side_tag() const { return static_cast<Side>(node_->tag); }
  Copy copy_tag() const { return static_cast<Copy>(node_->tag); }
  /// Payload of a side or copy atom.
  Atom inner() const { return Atom(node_->a); }
  Atom outer() const { return Atom(node_->a); }
  /// Second coordinate of a lex pair.
  Atom second_coordinate() const { return Atom(node_->b); }

  std::size_t hash() const { return std::hash<const void*>{}(node_); }

  friend bool operator==(const Atom& x, const Atom& y) { return x.node_ == y.node_; }
  friend std::strong_ordering operator<=>(const Atom& x, const Atom& y) {
    int c = detail::compare_nodes(x.node_, y.node_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical textual rendering: `a(q)`, `x`, `L.<atom>`, `(<atom>,<atom>)`, `1.<atom>`.
  std::string to_string() const {
    switch (kind()) {
      case Kind::point:
        return "a(" + value().to_string() + ")";
      case Kind::symbol:
        return name();
      case Kind::side:
        return (side_tag() == Side::left ? "L." : "R.") + inner().to_string();
      case Kind::pair:
        return "(" + outer().to_string() + "," + second_coordinate().to_string() + ")";
      case Kind::copy:
        return (copy_tag() == Copy::first ? "1." : "2.") + inner().to_string();
    }
    return {};
  }

 private:
  explicit Atom(const detail::AtomNode* node) : node_(node) {}
  const detail::AtomNode* node_;
};

using AtomTuple = std::vector<Atom>;

inline std::string to_string(const AtomTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += t[i].to_string();
  }
  return out + ")";
}

}  // namespace eqgb

template <>
struct std::hash<eqgb::Atom> {
  std::size_t operator()(const eqgb::Atom& a) const { return a.hash(); }
};

#endif  // EQGB_ATOM_HPP
