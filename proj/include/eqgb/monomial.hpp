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

#ifndef EQGB_MONOMIAL_HPP
#define EQGB_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "eqgb/atom.hpp"
#include "eqgb/errors.hpp"
#include "eqgb/structure.hpp"

namespace eqgb {

/// A finitely supported map from atoms to positive exponents. The empty
/// monomial is the unit 1. Entries are kept sorted by atom.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  using Entry = std::pair<Atom, Exponent>;
  using Entries = boost::container::small_vector<Entry, 4>;

  Monomial() = default;

  static Monomial of(const Atom& a, Exponent e = 1) {
    Monomial m;
    if (e > 0) m.entries_.emplace_back(a, e);
    return m;
  }

  /// Builds from arbitrary entries: sorts, adds up repeated atoms, drops zeros.
  static Monomial from_entries(const std::vector<Entry>& entries) {
    return from_entries(Entries(entries.begin(), entries.end()));
  }
  static Monomial from_entries(Entries entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    Monomial m;
    for (const Entry& e : entries) {
      if (e.second == 0) continue;
      if (!m.entries_.empty() && m.entries_.back().first == e.first) {
        m.entries_.back().second += e.second;
      } else {
        m.entries_.push_back(e);
      }
    }
    return m;
  }

  bool is_one() const { return entries_.empty(); }
  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const Entry& e : entries_) d += e.second;
    return d;
  }

  Exponent exponent(const Atom& a) const {
    for (const Entry& e : entries_) {
      if (e.first == a) return e.second;
    }
    return 0;
  }

  /// Sorted atoms with a positive exponent.
  AtomTuple dom() const {
    AtomTuple out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.first);
    return out;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial m;
    m.entries_.reserve(x.entries_.size() + y.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < x.entries_.size() || j < y.entries_.size()) {
      if (j == y.entries_.size() || (i < x.entries_.size() && x.entries_[i].first < y.entries_[j].first)) {
        m.entries_.push_back(x.entries_[i++]);
      } else if (i == x.entries_.size() || y.entries_[j].first < x.entries_[i].first) {
        m.entries_.push_back(y.entries_[j++]);
      } else {
        m.entries_.emplace_back(x.entries_[i].first, x.entries_[i].second + y.entries_[j].second);
        ++i;
        ++j;
      }
    }
    return m;
  }

  /// Plain divisibility: componentwise exponent comparison.
  bool divides(const Monomial& n) const {
    std::size_t j = 0;
    for (const Entry& e : entries_) {
      while (j < n.entries_.size() && n.entries_[j].first < e.first) ++j;
      if (j == n.entries_.size() || !(n.entries_[j].first == e.first) || n.entries_[j].second < e.second) {
        return false;
      }
    }
    return true;
  }

  /// n / this, for a divisor of n.
  Monomial quotient_of(const Monomial& n) const {
    if (!divides(n)) throw InputError("monomial " + to_string() + " does not divide " + n.to_string());
    Monomial q;
    std::size_t i = 0;
    for (const Entry& e : n.entries_) {
      Exponent sub = 0;
      if (i < entries_.size() && entries_[i].first == e.first) sub = entries_[i++].second;
      if (e.second > sub) q.entries_.emplace_back(e.first, e.second - sub);
    }
    return q;
  }

  static Monomial lcm(const Monomial& x, const Monomial& y) {
    Monomial m;
    std::size_t i = 0, j = 0;
    while (i < x.entries_.size() || j < y.entries_.size()) {
      if (j == y.entries_.size() || (i < x.entries_.size() && x.entries_[i].first < y.entries_[j].first)) {
        m.entries_.push_back(x.entries_[i++]);
      } else if (i == x.entries_.size() || y.entries_[j].first < x.entries_[i].first) {
        m.entries_.push_back(y.entries_[j++]);
      } else {
        m.entries_.emplace_back(x.entries_[i].first, std::max(x.entries_[i].second, y.entries_[j].second));
        ++i;
        ++j;
      }
    }
    return m;
  }

  /// Renames atoms through an injective map defined on dom().
  Monomial rename(const AtomMap& map) const {
    Monomial m;
    m.entries_.reserve(entries_.size());
    bool sorted = true;
    for (const Entry& e : entries_) {
      m.entries_.emplace_back(map.at(e.first), e.second);
      if (m.entries_.size() > 1 && !(m.entries_[m.entries_.size() - 2].first < m.entries_.back().first)) {
        sorted = false;
      }
    }
    if (!sorted) return from_entries(std::move(m.entries_));
    return m;
  }

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.entries_ == y.entries_; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const Entry& e : entries_) {
      h = (h ^ e.first.hash()) * 0x100000001b3ull;
      h = (h ^ e.second) * 0x100000001b3ull;
    }
    return h;
  }

  /// `1`, or atoms ascending joined by `*` with `^k` for exponents above one.
  std::string to_string() const { return to_string([](const Atom& a) { return a.to_string(); }); }

  std::string to_string(const std::function<std::string(const Atom&)>& name) const {
    if (entries_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += "*";
      out += name(entries_[i].first);
      if (entries_[i].second > 1) out += "^" + std::to_string(entries_[i].second);
    }
    return out;
  }

 private:
  Entries entries_;
};

/// Reverse lexicographic order: the exponent at the largest atom where the two
/// monomials differ decides.
inline std::strong_ordering revlex_compare(const Monomial& m, const Monomial& n) {
  const auto& x = m.entries();
  const auto& y = n.entries();
  std::size_t i = x.size(), j = y.size();
  while (i > 0 && j > 0) {
    const auto& ex = x[i - 1];
    const auto& ey = y[j - 1];
    if (ex.first == ey.first) {
      if (ex.second != ey.second) return ex.second <=> ey.second;
      --i;
      --j;
      continue;
    }
    return ex.first <=> ey.first;
  }
  if (i > 0) return std::strong_ordering::greater;
  if (j > 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

inline bool revlex_less(const Monomial& m, const Monomial& n) { return revlex_compare(m, n) < 0; }

inline Ordering revlex_compare(const Structure& s, const Monomial& m, const Monomial& n) {
  for (const auto& e : m.entries()) s.require(e.first);
  for (const auto& e : n.entries()) s.require(e.first);
  auto c = revlex_compare(m, n);
  return c < 0 ? Ordering::less : (c > 0 ? Ordering::greater : Ordering::equal);
}

inline bool divides(const Monomial& m, const Monomial& n) { return m.divides(n); }
inline Monomial lcm(const Monomial& m, const Monomial& n) { return Monomial::lcm(m, n); }

namespace detail {

/// For each atom of m, the atoms of n with at least the same exponent.
inline std::vector<AtomTuple> dividing_options(const Monomial& m, const Monomial& n) {
  std::vector<AtomTuple> options;
  options.reserve(m.size());
  for (const auto& [x, e] : m.entries()) {
    AtomTuple ys;
    for (const auto& [y, f] : n.entries()) {
      if (f >= e) ys.push_back(y);
    }
    options.push_back(std::move(ys));
  }
  return options;
}

}  // namespace detail

/// Embeddings ι of dom(m) into dom(n) with m(x) <= n(ι(x)) for every x.
inline std::vector<AtomMap> dividing_embeddings(const Structure& s, const Monomial& m, const Monomial& n) {
  std::vector<AtomMap> out;
  AtomTuple source = m.dom();
  search_extendable(s, source, detail::dividing_options(m, n), [&](const AtomTuple& image) {
    out.emplace_back(source, image);
    return true;
  });
  return out;
}

/// m divides some group translate of n.
inline bool divides_upto_g(const Structure& s, const Monomial& m, const Monomial& n) {
  if (s.is_reduct()) throw InputError("divisibility up to the group is computed in the ordered base structure");
  if (m.is_one()) return true;
  if (m.size() > n.size() || m.degree() > n.degree()) return false;
  return !search_extendable(s, m.dom(), detail::dividing_options(m, n), [](const AtomTuple&) { return false; });
}

}  // namespace eqgb

template <>
struct std::hash<eqgb::Monomial> {
  std::size_t operator()(const eqgb::Monomial& m) const { return m.hash(); }
};

#endif  // EQGB_MONOMIAL_HPP
