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

#ifndef EQGB_SELFTEST_HPP
#define EQGB_SELFTEST_HPP

// Oracle agreement suites bundled with the CLI. Reports contain no timings,
// so repeated runs are byte-identical.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eqgb/basis.hpp"
#include "eqgb/ideal.hpp"
#include "eqgb/monomial.hpp"
#include "eqgb/oracle/bfs.hpp"
#include "eqgb/oracle/classical.hpp"
#include "eqgb/oracle/subword.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/rewrite.hpp"
#include "eqgb/text.hpp"

namespace eqgb {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (ok) {
      ++passed;
    } else {
      failures.push_back(what);
    }
  }
  std::size_t failed() const { return checks - passed; }
};

struct SelftestReport {
  std::vector<SuiteResult> suites;

  bool ok() const {
    for (const SuiteResult& s : suites) {
      if (s.failed()) return false;
    }
    return true;
  }

  std::string text() const {
    std::string out;
    for (const SuiteResult& s : suites) {
      out += "suite " + s.name + ": " + std::to_string(s.checks) + " checks, " + std::to_string(s.passed) +
             " passed, " + std::to_string(s.failed()) + " failed\n";
      for (std::size_t i = 0; i < s.failures.size() && i < 10; ++i) out += "  FAIL " + s.failures[i] + "\n";
      if (s.failures.size() > 10) out += "  ... " + std::to_string(s.failures.size() - 10) + " more\n";
    }
    out += std::string("selftest: ") + (ok() ? "PASS" : "FAIL") + " (" + std::to_string(suites.size()) +
           " suites)\n";
    return out;
  }
};

struct SelftestOptions {
  std::vector<std::string> suites{"classical", "subword", "reach"};
  /// Replace saturated bases by the raw generators (a negative control).
  bool inject_fault = false;
  SaturationOptions saturation;
};

inline const std::vector<std::string>& selftest_suite_names() {
  static const std::vector<std::string> names{"classical", "subword", "reach"};
  return names;
}

namespace detail {

/// Small deterministic generator; independent of the standard library's
/// distribution implementations.
class Dice {
 public:
  explicit Dice(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 rng_;
};

inline Monomial random_monomial(Dice& dice, const AtomTuple& atoms, std::size_t max_degree) {
  std::vector<Monomial::Entry> entries;
  std::size_t budget = dice.below(max_degree + 1);
  while (budget > 0) {
    entries.emplace_back(atoms[dice.below(atoms.size())], 1);
    --budget;
  }
  return Monomial::from_entries(std::move(entries));
}

inline Polynomial random_polynomial(Dice& dice, const AtomTuple& atoms, std::size_t max_degree,
                                    std::size_t max_terms) {
  Polynomial p;
  std::size_t terms = 1 + dice.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    long c = dice.between(-3, 3);
    if (c == 0) c = 1;
    p += Polynomial::monomial(random_monomial(dice, atoms, max_degree), Rational(c));
  }
  return p;
}

inline OrbitSet raw_base(const EquivariantIdeal& i) { return i.base_generators(); }

inline void classical_suite(const SelftestOptions& o, SuiteResult& r) {
  struct Case {
    const char* structure;
    std::vector<const char*> gens;
    std::vector<const char*> probes;
  };
  const std::vector<Case> cases{
      {"finite(x1,x2)", {"x1", "x2"}, {"x2", "x1*x2 + x1", "x2 - 1"}},
      {"finite(x1,x2)", {"x2 - x1", "x1"}, {"x2", "x2^2 - x1"}},
      {"finite(x,y,z)", {"x^2 - y", "x^3 - z"}, {"z - x*y", "y^3 - z^2", "y - x"}},
      {"finite(x,y)", {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}, {"x^2", "x*y", "y^2 - 1/2*x", "x + y"}},
      {"finite(x,y,z)", {"x*y - z", "y*z - x", "x*z - y"}, {"x^2 - y^2", "x*y*z - x^2", "z^3 - z"}},
      {"finite(w,x,y,z)", {"x*z - y^2", "x*w - y*z", "y*w - z^2"}, {"x*w^2 - z^3", "w*y - x"}},
  };
  Dice dice(0x5eed0001);
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const Case& k = cases[c];
    Structure s = parse_structure(k.structure);
    std::vector<Polynomial> gens;
    for (const char* g : k.gens) gens.push_back(parse_polynomial(g, s));
    EquivariantIdeal ideal = EquivariantIdeal::from_generators(s, gens, o.saturation);
    OrbitSet basis = o.inject_fault ? raw_base(ideal) : ideal.basis();
    oracle::ClassicalIdeal classical(s, gens);
    std::vector<Polynomial> probes;
    for (const char* p : k.probes) probes.push_back(parse_polynomial(p, s));
    for (int i = 0; i < 10; ++i) {
      // Half the probes are combinations of generators, half are perturbed.
      Polynomial p;
      for (const Polynomial& g : gens) {
        std::size_t room = g.degree() < 4 ? 4 - g.degree() : 0;
        p += random_polynomial(dice, s.symbols(), room, 2) * g;
      }
      if (i % 2 == 1) p += random_polynomial(dice, s.symbols(), 4, 2);
      probes.push_back(p);
    }
    for (const Polynomial& p : probes) {
      bool mine = member(basis, p);
      bool theirs = classical.member(p);
      r.record(mine == theirs, "ideal " + std::to_string(c + 1) + " probe " + p.to_string() + ": egb=" +
                                   (mine ? "YES" : "NO") + " oracle=" + (theirs ? "YES" : "NO"));
    }
  }
}

inline void subword_suite(const SelftestOptions& o, SuiteResult& r) {
  Structure q = Structure::dense();
  Dice dice(0x5eed0002);
  auto random = [&]() {
    std::vector<Monomial::Entry> entries;
    std::size_t n = dice.below(6);
    for (std::size_t i = 0; i < n; ++i) {
      entries.emplace_back(Atom::point(dice.between(1, 8)), static_cast<Monomial::Exponent>(dice.between(1, 4)));
    }
    return Monomial::from_entries(std::move(entries));
  };
  for (int i = 0; i < 500; ++i) {
    Monomial m = random();
    Monomial n = random();
    while (m.size() > 5) m = random();
    while (n.size() > 5) n = random();
    bool mine = o.inject_fault ? m.divides(n) : divides_upto_g(q, m, n);
    bool theirs = oracle::dense_divides_upto_g(m, n);
    r.record(mine == theirs, m.to_string() + " | " + n.to_string() + ": egb=" + (mine ? "YES" : "NO") +
                                 " oracle=" + (theirs ? "YES" : "NO"));
  }
}

inline void reach_suite(const SelftestOptions& o, SuiteResult& r) {
  struct Case {
    const char* structure;
    std::vector<std::pair<const char*, const char*>> rules;
    std::vector<std::pair<const char*, const char*>> queries;
  };
  const std::vector<Case> cases{
      {"eqatoms",
       {{"a(1)^2*a(2)^2", "a(1)^2"}},
       {{"a(1)^2*a(2)^2", "a(1)^2"},
        {"a(1)^3", "a(1)^2"},
        {"a(1)^4", "a(1)^2"},
        {"a(1)^2*a(2)^4", "a(1)^2"},
        {"a(1)^2*a(2)^3", "a(1)^2"},
        {"a(1)^4*a(2)^2*a(3)^2", "a(1)^2"},
        {"a(1)*a(2)", "a(1)^2"},
        {"a(1)^2", "a(1)^2"}}},
      {"Q",
       {{"a(1)*a(2)", "a(2)"}},
       {{"a(1)*a(2)", "a(1)"},
        {"a(1)*a(2)", "a(2)"},
        {"a(1)^2*a(2)", "a(2)"},
        {"a(1)*a(3)", "a(3)"},
        {"a(2)", "a(1)"},
        {"a(1)^2", "a(1)"}}},
      {"finite(x,y)",
       {{"x^2", "y"}, {"x*y", "x"}},
       {{"x^3", "x"}, {"y^2", "y"}, {"x", "y"}, {"x^2*y", "x^2"}, {"y^3", "x^2"}}},
  };
  for (const Case& k : cases) {
    Structure s = parse_structure(k.structure);
    MonomialRewriteSystem system{s, {}};
    for (const auto& [m, n] : k.rules) system.rules.emplace_back(parse_monomial(m, s), parse_monomial(n, s));
    EquivariantIdeal ideal = rewrite_ideal(system, o.saturation);
    OrbitSet basis = o.inject_fault ? raw_base(ideal) : ideal.basis();
    for (const auto& [from, to] : k.queries) {
      Monomial ms = parse_monomial(from, s);
      Monomial mt = parse_monomial(to, s);
      Polynomial diff = Polynomial::monomial(ms) - Polynomial::monomial(mt);
      bool mine = diff.is_zero() || member(basis, diff);
      oracle::BfsBound bound{4, 6, 20000};
      oracle::BfsOutcome found = oracle::bfs_reach(system, ms, mt, bound);
      if (mine && found != oracle::BfsOutcome::found) {
        bound = {5, 8, 100000};
        found = oracle::bfs_reach(system, ms, mt, bound);
      }
      bool ok = mine ? found == oracle::BfsOutcome::found : found != oracle::BfsOutcome::found;
      std::string where = std::string(k.structure) + " " + from + " -> " + to;
      r.record(ok, where + ": egb=" + (mine ? "YES" : "NO") +
                       " bfs=" + (found == oracle::BfsOutcome::found ? "found" : "not found"));
    }
  }
}

}  // namespace detail

inline SelftestReport run_selftest(const SelftestOptions& o = {}) {
  SelftestReport report;
  for (const std::string& name : o.suites) {
    SuiteResult r;
    r.name = name;
    if (name == "classical") {
      detail::classical_suite(o, r);
    } else if (name == "subword") {
      detail::subword_suite(o, r);
    } else if (name == "reach") {
      detail::reach_suite(o, r);
    } else {
      throw InputError("unknown selftest suite '" + name + "'");
    }
    report.suites.push_back(std::move(r));
  }
  return report;
}

}  // namespace eqgb

#endif  // EQGB_SELFTEST_HPP
