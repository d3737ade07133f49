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

#ifndef EQGB_ORACLE_CLASSICAL_HPP
#define EQGB_ORACLE_CLASSICAL_HPP

// Textbook Buchberger over a fixed number of variables, written against its
// own dense-exponent representation so that it shares no code paths with the
// equivariant machinery.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eqgb/polynomial.hpp"
#include "eqgb/structure.hpp"

namespace eqgb::oracle {

using Exponents = std::vector<unsigned>;

/// Variable n-1 is the largest; the exponent of the largest differing
/// variable decides.
struct RevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};

class ClassicalPolynomial {
 public:
  using Terms = std::map<Exponents, mpq_class, RevlexGreater>;

  explicit ClassicalPolynomial(std::size_t vars = 0) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Exponents& lead() const { return terms_.begin()->first; }
  const mpq_class& lead_coefficient() const { return terms_.begin()->second; }

  void add(const Exponents& e, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  /// this += c * x^e * q
  void add_multiple(const mpq_class& c, const Exponents& e, const ClassicalPolynomial& q) {
    for (const auto& [f, d] : q.terms_) {
      Exponents g(vars_);
      for (std::size_t i = 0; i < vars_; ++i) g[i] = e[i] + f[i];
      add(g, c * d);
    }
  }

  void make_monic() {
    if (is_zero()) return;
    mpq_class inv = 1 / lead_coefficient();
    for (auto& [e, c] : terms_) c *= inv;
  }

  friend bool operator==(const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::size_t vars_;
  Terms terms_;
};

inline bool exponent_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Full multivariate division; returns the remainder.
inline ClassicalPolynomial divide(ClassicalPolynomial p, const std::vector<ClassicalPolynomial>& divisors) {
  ClassicalPolynomial r(p.vars());
  while (!p.is_zero()) {
    Exponents lead = p.lead();
    mpq_class lc = p.lead_coefficient();
    bool divided = false;
    for (const ClassicalPolynomial& g : divisors) {
      if (g.is_zero() || !exponent_divides(g.lead(), lead)) continue;
      Exponents q(lead.size());
      for (std::size_t i = 0; i < q.size(); ++i) q[i] = lead[i] - g.lead()[i];
      p.add_multiple(-lc / g.lead_coefficient(), q, g);
      divided = true;
      break;
    }
    if (!divided) {
      r.add(lead, lc);
      p.add(lead, -lc);
    }
  }
  return r;
}

/// Reduced Gröbner basis via the unoptimized Buchberger loop.
inline std::vector<ClassicalPolynomial> buchberger(std::vector<ClassicalPolynomial> gens) {
  std::vector<ClassicalPolynomial> g;
  for (auto& p : gens) {
    if (!p.is_zero()) g.push_back(std::move(p));
  }
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
  }
  while (!queue.empty()) {
    auto [i, j] = queue.back();
    queue.pop_back();
    const Exponents& a = g[i].lead();
    const Exponents& b = g[j].lead();
    Exponents l(a.size()), ua(a.size()), ub(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      l[k] = std::max(a[k], b[k]);
      ua[k] = l[k] - a[k];
      ub[k] = l[k] - b[k];
    }
    ClassicalPolynomial s(a.size());
    s.add_multiple(1 / g[i].lead_coefficient(), ua, g[i]);
    s.add_multiple(-1 / g[j].lead_coefficient(), ub, g[j]);
    ClassicalPolynomial r = divide(s, g);
    if (r.is_zero()) continue;
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) queue.emplace_back(k, g.size() - 1);
  }
  // Minimalize, then interreduce.
  std::vector<ClassicalPolynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !exponent_divides(g[j].lead(), g[i].lead())) continue;
      redundant = g[j].lead() != g[i].lead() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<ClassicalPolynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ClassicalPolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    ClassicalPolynomial lead_part(minimal[i].vars());
    lead_part.add(minimal[i].lead(), minimal[i].lead_coefficient());
    ClassicalPolynomial tail = minimal[i];
    tail.add(minimal[i].lead(), -minimal[i].lead_coefficient());
    ClassicalPolynomial r = divide(tail, others);
    lead_part.add_multiple(1, Exponents(r.vars(), 0), r);
    lead_part.make_monic();
    reduced.push_back(std::move(lead_part));
  }
  std::sort(reduced.begin(), reduced.end(), [](const ClassicalPolynomial& x, const ClassicalPolynomial& y) {
    return RevlexGreater{}(y.lead(), x.lead());
  });
  return reduced;
}

/// A classical ideal over the symbols of a finite structure, indexed by rank.
class ClassicalIdeal {
 public:
  ClassicalIdeal(const Structure& s, const std::vector<Polynomial>& gens) : structure_(s) {
    if (s.kind() != Structure::Kind::finite) throw InputError("the classical oracle needs a finite structure");
    std::vector<ClassicalPolynomial> converted;
    for (const Polynomial& p : gens) converted.push_back(convert(p));
    basis_ = buchberger(std::move(converted));
  }

  ClassicalPolynomial convert(const Polynomial& p) const {
    std::size_t n = structure_.symbols().size();
    ClassicalPolynomial out(n);
    for (const Term& t : p.terms()) {
      Exponents e(n, 0);
      for (const auto& [a, k] : t.monomial.entries()) {
        structure_.require(a);
        e[static_cast<std::size_t>(a.rank())] = k;
      }
      out.add(e, t.coefficient.get());
    }
    return out;
  }

  bool member(const Polynomial& p) const { return divide(convert(p), basis_).is_zero(); }
  const std::vector<ClassicalPolynomial>& basis() const { return basis_; }

 private:
  Structure structure_;
  std::vector<ClassicalPolynomial> basis_;
};

}  // namespace eqgb::oracle

#endif  // EQGB_ORACLE_CLASSICAL_HPP
