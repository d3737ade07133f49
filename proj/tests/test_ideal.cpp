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

#include "eqgb/ideal.hpp"
#include "eqgb/oracle/classical.hpp"
#include "support.hpp"

namespace eqgb {
namespace {

using testing::Gen;
using testing::P;
using testing::points;
using testing::S;

EquivariantIdeal I(const std::string& s, std::vector<std::string> gens) {
  Structure st = S(s);
  std::vector<Polynomial> ps;
  for (const std::string& g : gens) ps.push_back(P(st, g));
  return ideal_from_generators(st, ps);
}

TEST(Ideal, EqatomsMembership) {
  EquivariantIdeal a = I("eqatoms", {"a(1)"});
  EquivariantIdeal a2 = I("eqatoms", {"a(1)^2"});
  Structure e = S("eqatoms");
  EXPECT_TRUE(a.member(P(e, "a(5)")));
  EXPECT_TRUE(a.member(P(e, "a(3)*a(9) - 4*a(2)")));
  EXPECT_FALSE(a.member(P(e, "1")));
  EXPECT_FALSE(a2.member(P(e, "a(1)")));
  EXPECT_TRUE(a2.member(P(e, "a(7)^3 + a(2)^2*a(4)")));
  EXPECT_TRUE(ideal_includes(a, a2));
  EXPECT_FALSE(ideal_includes(a2, a));
  EXPECT_FALSE(ideal_equal(a, a2));
  EXPECT_EQ(a.base_structure(), Structure::dense());
}

TEST(Ideal, FiniteEqualityAcrossBases) {
  EXPECT_TRUE(ideal_equal(I("finite(x1,x2)", {"x1", "x2"}), I("finite(x1,x2)", {"x2 - x1", "x1"})));
  EXPECT_FALSE(ideal_equal(I("finite(x1,x2)", {"x1"}), I("finite(x1,x2)", {"x2"})));
  EXPECT_TRUE(ideal_member(I("finite(x1,x2)", {"x2 - x1", "x1"}), P(S("finite(x1,x2)"), "x2")));
}

TEST(Ideal, Intersections) {
  EquivariantIdeal m = ideal_intersect(I("finite(x1,x2)", {"x1"}), I("finite(x1,x2)", {"x2"}));
  EXPECT_TRUE(ideal_equal(m, I("finite(x1,x2)", {"x1*x2"})));
  EquivariantIdeal q = ideal_intersect(I("Q", {"a(1)"}), I("Q", {"a(1)^2"}));
  EXPECT_TRUE(ideal_equal(q, I("Q", {"a(1)^2"})));
  EquivariantIdeal e = ideal_intersect(I("eqatoms", {"a(1)^2"}), I("eqatoms", {"a(1)*a(2)"}));
  Structure eq = S("eqatoms");
  EXPECT_TRUE(e.member(P(eq, "a(1)^2*a(2)")));
  EXPECT_FALSE(e.member(P(eq, "a(1)^2")));
  EXPECT_FALSE(e.member(P(eq, "a(1)*a(2)")));
}

TEST(Ideal, SumAndProductExamples) {
  EXPECT_TRUE(ideal_equal(ideal_sum(I("finite(x,y)", {"x"}), I("finite(x,y)", {"y"})), I("finite(x,y)", {"x", "y"})));
  EXPECT_TRUE(ideal_equal(ideal_product(I("finite(x,y)", {"x"}), I("finite(x,y)", {"y"})), I("finite(x,y)", {"x*y"})));
  EquivariantIdeal p = ideal_product(I("Q", {"a(1)"}), I("Q", {"a(1)"}));
  EXPECT_TRUE(ideal_equal(p, I("Q", {"a(1)^2", "a(1)*a(2)"})));
  EXPECT_THROW(ideal_sum(I("Q", {"a(1)"}), I("eqatoms", {"a(1)"})), InputError);
}

std::vector<std::pair<EquivariantIdeal, EquivariantIdeal>> law_pairs() {
  return {{I("finite(x,y)", {"x^2 - y"}), I("finite(x,y)", {"x*y"})},
          {I("finite(x1,x2)", {"x1"}), I("finite(x1,x2)", {"x2"})},
          {I("Q", {"a(1)*a(2)"}), I("Q", {"a(1)^2"})},
          {I("eqatoms", {"a(1)^2"}), I("eqatoms", {"a(1)*a(2)"})}};
}

TEST(IdealLaws, LatticeAndProductInclusions) {
  for (const auto& [i, j] : law_pairs()) {
    EquivariantIdeal s = i.sum(j), p = i.product(j), m = i.intersect(j);
    EXPECT_TRUE(s.includes(i) && s.includes(j));
    EXPECT_TRUE(i.includes(m) && j.includes(m));
    EXPECT_TRUE(m.includes(p));
    EXPECT_TRUE(ideal_equal(s, j.sum(i)));
    EXPECT_TRUE(ideal_equal(p, j.product(i)));
    EXPECT_TRUE(ideal_equal(m, j.intersect(i)));
    EXPECT_TRUE(ideal_equal(i.sum(i), i));
    EXPECT_TRUE(ideal_equal(i.intersect(i), i));
    EXPECT_TRUE(ideal_equal(i.intersect(s), i));
  }
}

TEST(IdealLaws, IntersectionMatchesClassicalOracle) {
  Gen g(61);
  Structure f = S("finite(x,y)");
  EquivariantIdeal i = I("finite(x,y)", {"x^2 - y"}), j = I("finite(x,y)", {"x*y"});
  EquivariantIdeal m = ideal_intersect(i, j);
  oracle::ClassicalIdeal ci(f, i.generators().reps()), cj(f, j.generators().reps());
  for (int k = 0; k < 60; ++k) {
    Polynomial p = g.polynomial(f.symbols(), 3, 3, 2);
    if (k % 3 == 0) p = p * P(f, "x^2 - y") * P(f, "x*y");
    EXPECT_EQ(m.member(p), ci.member(p) && cj.member(p)) << p.to_string();
  }
}

TEST(IdealLaws, OrbitInvariance) {
  Gen g(62);
  Structure q = Structure::dense();
  AtomTuple pool = points({1, 2, 3, 4, 5, 6});
  for (const char* t : {"a(1)*a(2) - a(1)", "a(2)^2 - a(1)", "a(1) - 2*a(2)"}) {
    Polynomial h = P(q, t);
    EquivariantIdeal base = ideal_from_generators(q, {h});
    for (int k = 0; k < 4; ++k) {
      Polynomial moved = g.place(h, pool);
      EXPECT_TRUE(ideal_equal(base, ideal_from_generators(q, {moved}))) << moved.to_string();
      Polynomial probe = g.place(h, pool) * g.polynomial(pool, 2, 2, 1);
      EXPECT_TRUE(base.member(probe));
      EXPECT_EQ(base.member(probe + P(q, "a(1)")), base.member(g.place(probe + P(q, "a(1)"), pool)));
    }
  }
}

TEST(IdealLaws, EqatomsInvariantUnderAllBijections) {
  Gen g(63);
  Structure e = S("eqatoms");
  EquivariantIdeal i = I("eqatoms", {"a(1)^2*a(2) - a(2)"});
  std::vector<long> names{1, 2, 3, 4};
  for (int k = 0; k < 30; ++k) {
    Polynomial p = g.polynomial(points({1, 2, 3, 4}), 3, 3, 2);
    if (k % 2 == 0) p = p * P(e, "a(3)^2*a(1) - a(1)");
    std::vector<long> perm = names;
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(static_cast<std::uint64_t>(k)));
    AtomMap pi;
    for (std::size_t n = 0; n < names.size(); ++n) pi.set(Atom::point(names[n]), Atom::point(perm[n]));
    EXPECT_EQ(i.member(p), i.member(p.act(pi))) << p.to_string();
    if (k % 2 == 0) EXPECT_TRUE(i.member(p));
  }
}

}  // namespace
}  // namespace eqgb
