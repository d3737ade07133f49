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

#include "eqgb/basis.hpp"
#include "eqgb/oracle/classical.hpp"
#include "eqgb/oracle/linear.hpp"
#include "support.hpp"

namespace eqgb {
namespace {

using testing::Gen;
using testing::P;
using testing::points;
using testing::S;

const Structure Q = Structure::dense();

TEST(Freecol, Counts) {
  EXPECT_EQ(freecol(OrbitSet(Q, {P(Q, "a(1)")})).size(), 2u);
  EXPECT_EQ(freecol(OrbitSet(Q, {P(Q, "a(1)*a(2) - a(1)")})).size(), 4u);
  EXPECT_EQ(freecol(OrbitSet(Q, {P(Q, "5")})).size(), 1u);
  EXPECT_TRUE(freecol(OrbitSet(Q)).empty());
  EXPECT_EQ(freecol(OrbitSet(Q, {P(Q, "a(1)")})).structure(), S("doubled(Q)"));
}

TEST(Freecol, ColouringsMatchSubsets) {
  Gen g(51);
  AtomTuple pool = points({1, 2, 3, 4});
  for (int i = 0; i < 100; ++i) {
    Polynomial p = g.polynomial(pool, 3, 3, 2);
    if (p.is_zero()) continue;
    OrbitSet c = freecol(OrbitSet(Q, {p}));
    EXPECT_EQ(c.size(), std::size_t{1} << p.dom().size());
    for (const Polynomial& r : c.reps()) EXPECT_TRUE(OrbitSet(Q, {p}).contains(forget(r)));
    for (std::size_t mask = 0; mask < (std::size_t{1} << p.dom().size()); ++mask) {
      AtomTuple v;
      for (std::size_t k = 0; k < p.dom().size(); ++k) {
        if (mask >> k & 1) v.push_back(p.dom()[k]);
      }
      EXPECT_TRUE(c.contains(colorize(p, v)));
    }
  }
}

TEST(Forget, Examples) {
  Structure d = S("doubled(Q)");
  EXPECT_TRUE(forget(P(d, "1.a(1) - 2.a(1)")).is_zero());
  EXPECT_EQ(forget(P(d, "1.a(1)*2.a(2) + 2.a(1)")), P(Q, "a(1)*a(2) + a(1)"));
  EXPECT_THROW(forget(P(Q, "a(1)")), InputError);
  EXPECT_THROW(forget(OrbitSet(Q)), InputError);
}

TEST(Forget, UndoesFreecol) {
  std::vector<OrbitSet> inputs{OrbitSet(Q, {P(Q, "a(1)")}), OrbitSet(Q, {P(Q, "a(1)*a(2) - a(1)"), P(Q, "a(2)^2 + 3")}),
                               OrbitSet(S("finite(x,y)"), {P(S("finite(x,y)"), "x*y - x")})};
  for (const OrbitSet& h : inputs) EXPECT_EQ(forget(freecol(h)), h);
}

TEST(Egb, ColouringAddsTheMissingGenerator) {
  Structure f = S("finite(x1,x2)");
  OrbitSet b = egb(OrbitSet(f, {P(f, "x2 - x1"), P(f, "x1")}));
  EXPECT_TRUE(b.contains(P(f, "x2")));
  EXPECT_TRUE(member(b, P(f, "x2")));
  // The inputs alone are not a basis: x2 has no up-to-G divisor there.
  EXPECT_FALSE(member(OrbitSet(f, {P(f, "x2 - x1"), P(f, "x1")}), P(f, "x2")));
}

TEST(Egb, SingleOrbit) {
  OrbitSet b = egb(OrbitSet(Q, {P(Q, "a(1)")}));
  EXPECT_EQ(b, OrbitSet(Q, {P(Q, "a(1)")}));
  EXPECT_THROW(egb(OrbitSet(S("eqatoms"))), InputError);
}

/// In <a(i) - a(j)> every atom becomes one variable: p is a member iff p(t,...,t) = 0.
bool collapses(const Polynomial& p) {
  Polynomial t = Polynomial::monomial(Monomial::from_entries(std::vector<Monomial::Entry>{{Atom::point(0), 1}}));
  return p.substitute([&](const Atom&) { return t; }).is_zero();
}

TEST(Egb, DifferencesAgreeWithCollapseAndBoundedSpan) {
  std::vector<Polynomial> gens{P(Q, "a(1) - a(2)")};
  OrbitSet b = egb(OrbitSet(Q, gens));
  Gen g(52);
  AtomTuple pool = points({1, 2, 3});
  for (int i = 0; i < 20; ++i) {
    Polynomial p;
    if (i % 2 == 0) {
      Polynomial h = g.place(gens[0], pool);
      p = h * g.polynomial(pool, 2, 1, 1);
    } else {
      p = g.polynomial(pool, 3, 2, 1);
    }
    if (p.is_zero()) continue;
    bool mine = member(b, p);
    EXPECT_EQ(mine, collapses(p)) << p.to_string();
    EXPECT_EQ(mine, oracle::bounded_member(Q, gens, p, 2, 3)) << p.to_string();
  }
}

TEST(Member, ExamplesAndCertificates) {
  OrbitSet b = egb(OrbitSet(Q, {P(Q, "a(1)*a(2) - a(1)")}));
  Certificate c;
  Polynomial p = P(Q, "a(3)*a(5) - a(3)");
  ASSERT_TRUE(member(b, p, &c));
  EXPECT_EQ(evaluate_certificate(c), p);
  ASSERT_FALSE(c.empty());
  EXPECT_FALSE(member(b, P(Q, "a(1)")));
  EXPECT_FALSE(member(b, P(Q, "1")));
  EXPECT_TRUE(member(b, Polynomial()));
  EXPECT_THROW(member(OrbitSet(S("eqatoms")), P(Q, "a(1)")), InputError);
}

TEST(Member, CertificatesAreExactOnSampledMembers) {
  Gen g(53);
  std::vector<Polynomial> gens{P(Q, "a(1)*a(2) - a(1)"), P(Q, "a(1)^2 - a(2)")};
  OrbitSet b = egb(OrbitSet(Q, gens));
  AtomTuple pool = points({1, 2, 3, 4});
  for (int i = 0; i < 80; ++i) {
    Polynomial p;
    for (int k = 0; k < 2; ++k) p += g.place(g.pick(gens), pool) * g.polynomial(pool, 2, 2, 1);
    if (p.is_zero()) continue;
    Certificate c;
    ASSERT_TRUE(member(b, p, &c)) << p.to_string();
    EXPECT_EQ(evaluate_certificate(c), p);
    for (const CertificateTerm& t : c) EXPECT_TRUE(b.contains(t.rep));
  }
}

TEST(Egb, LeadingMonomialsOfMembersHaveDivisors) {
  Gen g(54);
  std::vector<Polynomial> gens{P(Q, "a(1)*a(2) - a(1)"), P(Q, "a(2)^2 + a(1)")};
  OrbitSet b = egb(OrbitSet(Q, gens));
  AtomTuple pool = points({1, 2, 3, 4, 5});
  std::size_t checked = 0;
  for (int i = 0; i < 150; ++i) {
    Polynomial p;
    for (int k = 0; k < 3; ++k) p += g.place(g.pick(gens), pool) * g.polynomial(pool, 2, 2, 2);
    if (p.is_zero()) continue;
    bool found = false;
    for (const Polynomial& q : b.reps()) found = found || divides_upto_g(Q, q.lm(), p.lm());
    EXPECT_TRUE(found) << p.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

TEST(Egb, AgreesWithClassicalBasesOnFiniteStructures) {
  Gen g(55);
  Structure f = S("finite(x,y,z)");
  std::vector<std::vector<std::string>> cases{
      {"x^2 - y", "x^3 - z"}, {"x*y - z", "y*z - x", "x*z - y"}, {"x*y - 1", "y^2 - x"}, {"z^2 - x*y", "x^2 - z"}};
  for (const auto& k : cases) {
    std::vector<Polynomial> gens;
    for (const std::string& t : k) gens.push_back(P(f, t));
    OrbitSet b = egb(OrbitSet(f, gens));
    oracle::ClassicalIdeal classical(f, gens);
    for (int i = 0; i < 40; ++i) {
      Polynomial p = g.polynomial(f.symbols(), 3, 3, 2);
      if (i % 2 == 0) {
        for (const Polynomial& h : gens) p += h * g.polynomial(f.symbols(), 2, 2, 1);
      }
      EXPECT_EQ(member(b, p), classical.member(p)) << p.to_string();
    }
  }
}

}  // namespace
}  // namespace eqgb
