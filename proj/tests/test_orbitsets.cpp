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

#include <gtest/gtest.h>

#include "eqgb/orbitset.hpp"
#include "support.hpp"

namespace eqgb {
namespace {

using testing::Gen;
using testing::P;
using testing::points;
using testing::S;

const Structure Q = Structure::dense();

TEST(OrbitSet, ContainsUpToTheGroupAndScalars) {
  OrbitSet s(Q, {P(Q, "a(1)")});
  EXPECT_TRUE(s.contains(P(Q, "a(7)")));
  EXPECT_TRUE(s.contains(P(Q, "-3*a(7)")));
  EXPECT_FALSE(s.contains(P(Q, "a(1)^2")));
  EXPECT_FALSE(OrbitSet(Q).contains(P(Q, "a(1)")));
  EXPECT_FALSE(s.contains(Polynomial()));
}

TEST(OrbitSet, InsertAndUnion) {
  OrbitSet s(Q, {P(Q, "a(1)")});
  EXPECT_FALSE(s.insert(P(Q, "a(3)")));
  EXPECT_TRUE(s.insert(P(Q, "a(1)*a(2)")));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_FALSE(s.insert(Polynomial()));
  EXPECT_EQ(unite(s, OrbitSet(Q)), s);
  EXPECT_THROW(unite(s, OrbitSet(S("finite(x)"))), InputError);
  EXPECT_EQ(s.to_string(), "structure: Q\n[\n  a(1)\n  a(1)*a(2)\n]\n");
}

TEST(OrbitSet, RepresentationIndependence) {
  Gen g(31);
  AtomTuple pool = points({1, 2, 3, 4});
  for (int i = 0; i < 100; ++i) {
    std::vector<Polynomial> members;
    for (int k = 0; k < 4; ++k) {
      Polynomial p = g.polynomial(pool, 3, 2, 2);
      if (!p.is_zero()) members.push_back(p);
    }
    std::vector<Polynomial> moved;
    for (const Polynomial& p : members) {
      moved.push_back(p.act(g.monotone(p.dom())).scale(Rational(g.between(1, 9), g.between(1, 9)) * Rational(g.coin() ? 1 : -1)));
    }
    std::reverse(moved.begin(), moved.end());
    EXPECT_EQ(OrbitSet(Q, members).reps(), OrbitSet(Q, moved).reps());
  }
}

TEST(Pairs, Counts) {
  OrbitSet s(Q, {P(Q, "a(1)")});
  auto ps = pairs(s, s);
  ASSERT_EQ(ps.size(), 3u);
  std::set<std::string> seen;
  for (const auto& [p, q] : ps) seen.insert(p.to_string() + "," + q.to_string());
  EXPECT_EQ(seen, (std::set<std::string>{"a(1),a(1)", "a(1),a(2)", "a(2),a(1)"}));
  Structure f = S("finite(x)");
  OrbitSet fx(f, {P(f, "x")});
  EXPECT_EQ(pairs(fx, fx).size(), 1u);
  EXPECT_TRUE(pairs(OrbitSet(Q), s).empty());
}

TEST(Pairs, CompleteAndIrredundantUnderDiagonalAction) {
  Gen g(32);
  OrbitSet s(Q, {P(Q, "a(1) - a(2)"), P(Q, "a(1)^2")});
  OrbitSet t(Q, {P(Q, "a(1)*a(2) + a(3)")});
  auto ps = pairs(s, t);
  auto key = [](const Polynomial& p, const Polynomial& q) {
    AtomTuple joined = p.dom();
    AtomTuple dq = q.dom();
    joined.insert(joined.end(), dq.begin(), dq.end());
    return joined;
  };
  for (int i = 0; i < 200; ++i) {
    // A concrete member of each orbit, placed at random over a shared pool.
    const Polynomial& p0 = g.pick(s.reps());
    const Polynomial& q0 = t.reps()[0];
    AtomTuple pool = points({1, 2, 3, 4, 5, 6});
    auto place = [&](const Polynomial& p) {
      AtomTuple img = sorted_distinct(g.tuple(pool, 6));
      while (img.size() < p.dom().size()) img = sorted_distinct(g.tuple(pool, 6));
      AtomTuple chosen;
      std::vector<std::size_t> idx(img.size());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      while (chosen.size() < p.dom().size()) {
        std::size_t j = g.below(idx.size());
        chosen.push_back(img[idx[j]]);
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(j));
      }
      std::sort(chosen.begin(), chosen.end());
      return p.act(AtomMap(p.dom(), chosen));
    };
    Polynomial p = place(p0), q = place(q0);
    std::size_t hits = 0;
    for (const auto& [a, b] : ps) {
      if (!poly_orbit_equal(Q, a, p) || !poly_orbit_equal(Q, b, q)) continue;
      AtomTuple x = key(a, b), y = key(p, q);
      if (orbit_equal(Q, x, y)) ++hits;
    }
    EXPECT_EQ(hits, 1u) << p.to_string() << " , " << q.to_string();
  }
}

TEST(MapEquivariant, Images) {
  OrbitSet s(Q, {P(Q, "a(1)"), P(Q, "a(1) - a(2)")});
  EXPECT_EQ(map_equivariant(s, [](const Polynomial& p) { return p.scale(Rational(2)); }), s);
  OrbitSet sq = map_equivariant(OrbitSet(Q, {P(Q, "a(1)")}), [](const Polynomial& p) { return p * p; });
  EXPECT_EQ(sq, OrbitSet(Q, {P(Q, "a(1)^2")}));
}

}  // namespace
}  // namespace eqgb
