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

#ifndef EQGB_TESTS_SUPPORT_HPP
#define EQGB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eqgb/monomial.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/structure.hpp"
#include "eqgb/text.hpp"

namespace eqgb::testing {

inline Structure S(const std::string& d) { return parse_structure(d); }
inline Polynomial P(const Structure& s, const std::string& t) { return parse_polynomial(t, s); }
inline Monomial M(const Structure& s, const std::string& t) { return parse_monomial(t, s); }
inline Atom A(const Structure& s, const std::string& t) { return parse_atom(t, s); }
inline Atom pt(long v) { return Atom::point(v); }

inline AtomTuple points(std::initializer_list<long> vs) {
  AtomTuple out;
  for (long v : vs) out.push_back(Atom::point(v));
  return out;
}

/// Fixed-seed generator with distribution code independent of the stdlib.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 0; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  /// A pool of atoms of `s` rich enough to realize every small orbit.
  AtomTuple pool(const Structure& s, std::size_t n) {
    AtomTuple out;
    for (const AtomTuple& t : tuple_reps(s, n)) {
      for (const Atom& a : t) {
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  AtomTuple tuple(const AtomTuple& pool, std::size_t n) {
    AtomTuple t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(pick(pool));
    return t;
  }

  Monomial monomial(const AtomTuple& atoms, std::size_t max_atoms, std::uint32_t max_exp) {
    std::vector<Monomial::Entry> e;
    std::size_t n = below(max_atoms + 1);
    for (std::size_t i = 0; i < n; ++i) {
      e.emplace_back(pick(atoms), static_cast<Monomial::Exponent>(between(1, max_exp)));
    }
    return Monomial::from_entries(std::move(e));
  }

  Polynomial polynomial(const AtomTuple& atoms, std::size_t terms, std::size_t max_atoms, std::uint32_t max_exp) {
    Polynomial p;
    std::size_t n = 1 + below(terms);
    for (std::size_t i = 0; i < n; ++i) {
      long c = between(-4, 4);
      if (c == 0) c = 1;
      p += Polynomial::monomial(monomial(atoms, max_atoms, max_exp), Rational(c));
    }
    return p;
  }

  /// A random strictly increasing map on the given sorted points.
  AtomMap monotone(const AtomTuple& sorted_points) {
    AtomMap m;
    long at = between(-5, 5);
    for (const Atom& a : sorted_points) {
      at += between(1, 4);
      m.set(a, Atom::point(at));
    }
    return m;
  }

  /// p moved by a random order embedding of dom(p) into a sorted point pool.
  Polynomial place(const Polynomial& p, const AtomTuple& pool) {
    AtomTuple d = p.dom();
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng_);
    idx.resize(d.size());
    std::sort(idx.begin(), idx.end());
    AtomTuple img;
    for (std::size_t i : idx) img.push_back(pool[i]);
    return p.act(AtomMap(d, img));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace eqgb::testing

#endif  // EQGB_TESTS_SUPPORT_HPP
