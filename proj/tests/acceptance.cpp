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

// Acceptance gate: one PASS/FAIL line per check, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eqgb/automaton.hpp"
#include "eqgb/basis.hpp"
#include "eqgb/ideal.hpp"
#include "eqgb/oracle/bfs.hpp"
#include "eqgb/oracle/classical.hpp"
#include "eqgb/oracle/forward.hpp"
#include "eqgb/oracle/linear.hpp"
#include "eqgb/oracle/subword.hpp"
#include "eqgb/problem.hpp"
#include "eqgb/rewrite.hpp"
#include "eqgb/selftest.hpp"
#include "eqgb/text.hpp"

namespace {

using namespace eqgb;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> problems;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  Monomial monomial(const AtomTuple& atoms, std::size_t max_degree) {
    std::vector<Monomial::Entry> e;
    for (std::size_t d = below(max_degree + 1); d > 0; --d) e.emplace_back(atoms[below(atoms.size())], 1);
    return Monomial::from_entries(std::move(e));
  }
  Polynomial polynomial(const AtomTuple& atoms, std::size_t max_degree, std::size_t max_terms) {
    Polynomial p;
    for (std::size_t t = 1 + below(max_terms); t > 0; --t) {
      long c = between(-5, 5);
      p += Polynomial::monomial(monomial(atoms, max_degree), Rational(c == 0 ? 1 : c));
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

Polynomial P(const Structure& s, const std::string& t) { return parse_polynomial(t, s); }

Outcome classical_agreement() {
  struct Case {
    const char* structure;
    std::vector<const char*> gens;
  };
  const std::vector<Case> cases{
      {"finite(x1,x2)", {"x1", "x2"}},
      {"finite(x,y,z)", {"x^2 - y", "x^3 - z"}},
      {"finite(x,y)", {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}},
      {"finite(x,y,z)", {"x*y - z", "y*z - x", "x*z - y"}},
      {"finite(w,x,y,z)", {"x*z - y^2", "x*w - y*z", "y*w - z^2"}},
      {"finite(x,y)", {"x^2 + y^2 - 1", "x - y"}},
  };
  Outcome o;
  Rng rng(1001);
  std::size_t probes = 0;
  for (const Case& k : cases) {
    Structure s = parse_structure(k.structure);
    std::vector<Polynomial> gens;
    for (const char* g : k.gens) gens.push_back(P(s, g));
    OrbitSet b = egb(OrbitSet(s, gens));
    oracle::ClassicalIdeal classical(s, gens);
    for (int i = 0; i < 12; ++i) {
      Polynomial p;
      if (i % 2 == 0) {
        for (const Polynomial& g : gens) {
          if (g.degree() < 4) p += rng.polynomial(s.symbols(), 4 - g.degree(), 2) * g;
        }
      } else {
        p = rng.polynomial(s.symbols(), 4, 4);
      }
      if (p.degree() > 4) continue;
      ++probes;
      o.check(member(b, p) == classical.member(p), std::string(k.structure) + " " + p.to_string());
    }
  }
  o.check(probes >= 50, "too few probes");
  o.detail = std::to_string(cases.size()) + " ideals, " + std::to_string(probes) + " probes";
  return o;
}

Outcome domain_condition() {
  Outcome o;
  Structure f = parse_structure("finite(x1,x2)");
  OrbitSet plain(f, {P(f, "x2 - x1"), P(f, "x1")});
  OrbitSet b = egb(plain);
  o.check(b.contains(P(f, "x2")), "egb of {x2 - x1, x1} lacks x2");
  o.check(egb(OrbitSet(f, {P(f, "x1"), P(f, "x2")})).contains(P(f, "x2")), "egb of {x1, x2} lacks x2");
  o.check(!member(plain, P(f, "x2")), "the plain basis already reduces x2");
  o.check(member(b, P(f, "x2")), "x2 is not reduced by the basis");
  o.detail = "basis size " + std::to_string(b.size());
  return o;
}

Outcome eqatoms_membership() {
  Outcome o;
  Structure e = Structure::eqatoms();
  std::vector<Polynomial> gens{P(e, "a(1)")};
  EquivariantIdeal ideal = ideal_from_generators(e, gens);
  Rng rng(1003);
  AtomTuple atoms{Atom::point(1), Atom::point(2), Atom::point(3)};
  std::size_t n = 0;
  while (n < 20) {
    Polynomial p = rng.polynomial(atoms, 3, 3);
    p -= Polynomial::constant(p.evaluate([](const Atom&) { return Rational(0); }));
    if (p.is_zero()) continue;
    ++n;
    Polynomial q = p + Polynomial::constant(Rational(rng.between(1, 9)));
    o.check(ideal.member(p), "not a member: " + p.to_string());
    o.check(!ideal.member(q), "member: " + q.to_string());
    o.check(oracle::bounded_member(e, gens, p, 4, 4), "bounded span misses " + p.to_string());
    o.check(!oracle::bounded_member(e, gens, q, 4, 4), "bounded span contains " + q.to_string());
  }
  o.detail = std::to_string(n) + " polynomials";
  return o;
}

Outcome even_exponent_reachability() {
  Outcome o;
  MonomialRewriteSystem r = parse_rewrite_file("structure: eqatoms\nrule a(1)^2*a(2)^2 <-> a(1)^2\n");
  EquivariantIdeal ideal = rewrite_ideal(r);
  Monomial target = parse_monomial("a(1)^2", r.structure);
  std::size_t total = 0, positive = 0;
  for (int e1 = 0; e1 <= 4; ++e1) {
    for (int e2 = 0; e2 <= 4; ++e2) {
      for (int e3 = 0; e3 <= 4; ++e3) {
        std::vector<Monomial::Entry> entries;
        for (auto [a, x] : {std::pair{1, e1}, std::pair{2, e2}, std::pair{3, e3}}) {
          if (x) entries.emplace_back(Atom::point(a), static_cast<Monomial::Exponent>(x));
        }
        if (entries.empty()) continue;
        Monomial m = Monomial::from_entries(std::move(entries));
        ++total;
        bool even = e1 % 2 == 0 && e2 % 2 == 0 && e3 % 2 == 0;
        bool mine = m == target || reach(ideal, m, target);
        o.check(mine == even, m.to_string());
        if (mine) {
          ++positive;
          o.check(oracle::bfs_reach(r, m, target, {4, 6, 200000}) == oracle::BfsOutcome::found,
                  "search did not confirm " + m.to_string());
        }
      }
    }
  }
  o.detail = std::to_string(total) + " monomials, " + std::to_string(positive) + " reachable";
  return o;
}

Outcome subword_divisibility() {
  Outcome o;
  Structure q = Structure::dense();
  Rng rng(1005);
  auto random = [&] {
    std::vector<Monomial::Entry> e;
    for (std::size_t n = rng.below(6); n > 0; --n) {
      e.emplace_back(Atom::point(rng.between(1, 7)), static_cast<Monomial::Exponent>(rng.between(1, 4)));
    }
    Monomial m = Monomial::from_entries(std::move(e));
    return m;
  };
  std::size_t yes = 0;
  for (int i = 0; i < 500; ++i) {
    Monomial m = random(), n = random();
    bool mine = divides_upto_g(q, m, n);
    yes += mine;
    o.check(mine == oracle::dense_divides_upto_g(m, n), m.to_string() + " | " + n.to_string());
  }
  o.detail = "500 pairs, " + std::to_string(yes) + " divisible";
  return o;
}

Outcome zeroness_desk() {
  struct Desk {
    const char* text;
    bool zero;
  };
  const std::vector<Desk> cases{
      {"structure: Q\nV: v\noutput: v\n", true},
      {"structure: Q\nV: v\ninit: v = 1\ndelta v <- v^2\noutput: v - 1\n", true},
      {"structure: Q\nV: v\ninit: v = 1\ndelta v <- v^2\noutput: v\n", false},
      {"structure: Q\nV: v\ninit: a(5) = 3\ndelta v <- @\ndelta self <- 0\noutput: v^2 - 3*v\n", true},
      {"structure: Q\nV: v\ninit: a(5) = 3\ndelta v <- @\ndelta self <- 2*@\noutput: v^2 - 3*v\n", false},
      {"structure: Q\nV: v\ndelta v <- v + @\ndelta self <- 0\noutput: v\n", true},
      {"structure: Q\nV: v\ninit: v = 3\noutput: v\n", false},
      {"structure: eqatoms\nV: v\ninit: a(1) = 3\ndelta v <- @\ndelta self <- 0\noutput: v^2 - 3*v\n", true},
      {"structure: finite(x,y)\nV: v\ninit: x = 1, y = 2\ndelta v <- @\noutput: v^2 - v\n", false},
  };
  Outcome o;
  std::size_t words = 0;
  for (const Desk& d : cases) {
    PolynomialAutomaton a = parse_automaton_file(d.text);
    bool mine = zeroness(a);
    oracle::ForwardResult f = oracle::forward_zeroness(a, 3);
    words += f.words;
    o.check(mine == f.zero, std::string("disagreement on\n") + d.text);
    o.check(mine == d.zero, std::string("unexpected verdict on\n") + d.text);
  }
  o.detail = std::to_string(cases.size()) + " automata, " + std::to_string(words) + " simulated words";
  return o;
}

EquivariantIdeal ideal(const std::string& s, const std::vector<std::string>& gens) {
  Structure st = parse_structure(s);
  std::vector<Polynomial> ps;
  for (const std::string& g : gens) ps.push_back(P(st, g));
  return ideal_from_generators(st, ps);
}

Outcome ideal_laws() {
  Outcome o;
  std::vector<std::pair<EquivariantIdeal, EquivariantIdeal>> pairs{
      {ideal("finite(x1,x2)", {"x1"}), ideal("finite(x1,x2)", {"x2"})},
      {ideal("finite(x,y)", {"x^2 - y"}), ideal("finite(x,y)", {"x*y"})},
      {ideal("eqatoms", {"a(1)^2"}), ideal("eqatoms", {"a(1)*a(2)"})},
      {ideal("eqatoms", {"a(1)"}), ideal("eqatoms", {"a(1)*a(2)"})},
      {ideal("eqatoms", {"a(1)^2"}), ideal("eqatoms", {"a(1)^3"})},
  };
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [i, j] = pairs[k];
    std::string tag = "pair " + std::to_string(k + 1) + ": ";
    EquivariantIdeal s = ideal_sum(i, j), p = ideal_product(i, j), m = ideal_intersect(i, j);
    o.check(ideal_includes(m, p), tag + "IJ not inside the intersection");
    o.check(ideal_includes(i, m), tag + "intersection not inside I");
    o.check(ideal_includes(j, m), tag + "intersection not inside J");
    o.check(ideal_includes(s, i), tag + "I not inside I+J");
    o.check(ideal_includes(s, j), tag + "J not inside I+J");
    o.check(ideal_equal(ideal_sum(i, i), i), tag + "I+I differs from I");
    o.check(ideal_equal(ideal_intersect(i, i), i), tag + "I meet I differs from I");
  }
  o.check(ideal_equal(ideal_intersect(pairs[0].first, pairs[0].second), ideal("finite(x1,x2)", {"x1*x2"})),
          "<x1> meet <x2> differs from <x1*x2>");
  o.detail = std::to_string(pairs.size()) + " pairs";
  return o;
}

Outcome invariants() {
  Outcome o;
  Structure q = Structure::dense();
  Structure f = parse_structure("finite(x,y,z)");
  std::vector<OrbitSet> inputs{
      OrbitSet(q, {P(q, "a(1)*a(2) - a(1)")}),          OrbitSet(q, {P(q, "a(1) - a(2)")}),
      OrbitSet(q, {P(q, "a(1)^2 - a(2)")}),             OrbitSet(q, {P(q, "a(2)^2 - a(1)")}),
      OrbitSet(f, {P(f, "x^2 - y"), P(f, "x^3 - z")}), OrbitSet(f, {P(f, "x*y - z"), P(f, "y*z - x")}),
  };
  std::size_t runs = 0;
  for (const OrbitSet& h : inputs) {
    for (const OrbitSet& start : {h, freecol(h)}) {
      OrbitSet b = weakgb(start);
      ++runs;
      o.check(b.includes(sset(b)), "sset(B) not inside B for " + start.to_string());
      o.check(b.includes(start), "B does not contain its input");
    }
  }
  Rng rng(1008);
  AtomTuple pool{Atom::point(1), Atom::point(2), Atom::point(3), Atom::point(4)};
  OrbitSet reducers = egb(inputs[0]);
  std::size_t steps = 0;
  for (int i = 0; i < 300; ++i) {
    Polynomial p = rng.polynomial(pool, 4, 4);
    if (p.is_zero()) continue;
    for (const ReductionStep& s : reduction_candidates(reducers, p)) {
      ++steps;
      o.check(s.residue.is_zero() || revlex_less(s.residue.lm(), p.lm()), "step does not decrease on " + p.to_string());
    }
  }
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> gens;
    for (std::size_t k = 1 + rng.below(3); k > 0; --k) {
      Polynomial g = rng.polynomial(pool, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    OrbitSet h(q, gens);
    o.check(forget(freecol(h)) == h, "forget(freecol(H)) differs from H for " + h.to_string());
  }
  o.detail = std::to_string(runs) + " saturations, " + std::to_string(steps) + " reduction steps, 20 colourings";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string a = run_selftest().text();
  std::string b = run_selftest().text();
  SelftestOptions parallel;
  parallel.saturation.threads = 4;
  std::string c = run_selftest(parallel).text();
  o.check(a == b, "repeated reports differ");
  o.check(a == c, "parallel report differs");
  o.check(a.find("selftest: PASS") != std::string::npos, "selftest itself fails:\n" + a);
  o.detail = std::to_string(a.size()) + " report bytes";
  return o;
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Check> checks{
      {"classical-agreement", 10, classical_agreement},
      {"domain-condition", 1, domain_condition},
      {"eqatoms-membership", 10, eqatoms_membership},
      {"even-exponent-reachability", 60, even_exponent_reachability},
      {"subword-divisibility", 5, subword_divisibility},
      {"zeroness-desk", 30, zeroness_desk},
      {"ideal-laws", 10, ideal_laws},
      {"algorithmic-invariants", 0, invariants},
      {"determinism", 0, determinism},
  };
  int failures = 0;
  for (const Check& c : checks) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.check(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    std::printf("%s %s (%s; %.2f s)\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds);
    for (const std::string& p : o.problems) std::printf("  %s\n", p.c_str());
    failures += !o.ok;
  }
  std::printf("%d of %zu checks passed\n", static_cast<int>(checks.size()) - failures, checks.size());
  return failures == 0 ? 0 : 1;
}
