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

#ifndef EQGB_POLYNOMIAL_HPP
#define EQGB_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eqgb/atom.hpp"
#include "eqgb/errors.hpp"
#include "eqgb/monomial.hpp"
#include "eqgb/rational.hpp"
#include "eqgb/structure.hpp"

namespace eqgb {

struct Term {
  Monomial monomial;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

struct LeadingData {
  Monomial lm;
  Rational lc;
  Monomial cm;
  Term lt() const { return {lm, lc}; }
};

/// A polynomial with exact rational coefficients over atom indeterminates.
/// Terms are nonzero and sorted by revlex descending, so the first term is
/// the leading term.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Rational& c) { return monomial(Monomial(), c); }
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1)) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial atom(const Atom& a) { return monomial(Monomial::of(a)); }

  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return revlex_less(y.monomial, x.monomial); });
    Polynomial p;
    for (Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const Monomial& lm() const {
    require_nonzero();
    return terms_.front().monomial;
  }
  const Rational& lc() const {
    require_nonzero();
    return terms_.front().coefficient;
  }
  const Term& lt() const {
    require_nonzero();
    return terms_.front();
  }

  LeadingData leading_data() const {
    require_nonzero();
    LeadingData d{lm(), lc(), lm()};
    std::vector<Monomial::Entry> extra;
    for (const Atom& a : dom()) {
      if (d.lm.exponent(a) == 0) extra.emplace_back(a, 1);
    }
    d.cm = d.lm * Monomial::from_entries(std::move(extra));
    return d;
  }

  /// Sorted atoms occurring in some term.
  AtomTuple dom() const {
    AtomTuple out;
    for (const Term& t : terms_) {
      for (const auto& e : t.monomial.entries()) {
        if (std::find(out.begin(), out.end(), e.first) == out.end()) out.push_back(e.first);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  Rational coefficient(const Monomial& m) const {
    for (const Term& t : terms_) {
      if (t.monomial == m) return t.coefficient;
    }
    return Rational(0);
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
  }

  /// this + c * m * q, merged in one pass; multiplication by a monomial preserves revlex order.
  Polynomial add_scaled(const Rational& c, const Monomial& m, const Polynomial& q) const {
    if (c.is_zero() || q.is_zero()) return *this;
    Polynomial out;
    out.terms_.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    std::vector<Term> scaled;
    scaled.reserve(q.terms_.size());
    for (const Term& t : q.terms_) scaled.push_back({m * t.monomial, c * t.coefficient});
    while (i < terms_.size() || j < scaled.size()) {
      if (j == scaled.size()) {
        out.terms_.push_back(terms_[i++]);
        continue;
      }
      if (i == terms_.size()) {
        out.terms_.push_back(std::move(scaled[j++]));
        continue;
      }
      auto cmp = revlex_compare(terms_[i].monomial, scaled[j].monomial);
      if (cmp > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back(std::move(scaled[j++]));
      } else {
        Rational sum = terms_[i].coefficient + scaled[j].coefficient;
        if (!sum.is_zero()) out.terms_.push_back({terms_[i].monomial, std::move(sum)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    return p.add_scaled(Rational(1), Monomial(), q);
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return p.add_scaled(Rational(-1), Monomial(), q);
  }
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }

  Polynomial scale(const Rational& c) const {
    if (c.is_zero()) return {};
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coefficient *= c;
    return p;
  }

  Polynomial mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const {
    return Polynomial().add_scaled(c, m, *this);
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    for (const Term& t : p.terms_) out = out.add_scaled(t.coefficient, t.monomial, q);
    return out;
  }

  Polynomial monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scale(lc().inverse());
  }

  /// Renames atoms through an injective map defined on dom().
  Polynomial act(const AtomMap& map) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) terms.push_back({t.monomial.rename(map), t.coefficient});
    bool sorted = true;
    for (std::size_t i = 1; i < terms.size() && sorted; ++i) {
      sorted = revlex_less(terms[i].monomial, terms[i - 1].monomial);
    }
    if (!sorted) return from_terms(std::move(terms));
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  /// Ring substitution of every atom; `assign` must be defined on dom().
  Polynomial substitute(const std::function<Polynomial(const Atom&)>& assign) const {
    Polynomial out;
    for (const Term& t : terms_) {
      Polynomial term = constant(t.coefficient);
      for (const auto& [a, e] : t.monomial.entries()) {
        Polynomial image = assign(a);
        for (Monomial::Exponent k = 0; k < e; ++k) term = term * image;
      }
      out += term;
    }
    return out;
  }

  /// Value at a point; atoms outside the assignment read `fallback`.
  Rational evaluate(const std::function<Rational(const Atom&)>& value) const {
    Rational sum(0);
    for (const Term& t : terms_) {
      Rational prod = t.coefficient;
      for (const auto& [a, e] : t.monomial.entries()) {
        Rational v = value(a);
        for (Monomial::Exponent k = 0; k < e; ++k) prod *= v;
        if (prod.is_zero()) break;
      }
      sum += prod;
    }
    return sum;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }

  std::size_t hash() const {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (const Term& t : terms_) {
      h = (h ^ t.monomial.hash()) * 0x100000001b3ull;
      h = (h ^ t.coefficient.hash()) * 0x100000001b3ull;
    }
    return h;
  }

  /// Terms by revlex descending: `a(1)^2*a(2) - 3/2*a(3) + 1`; zero prints as `0`.
  std::string to_string() const { return to_string([](const Atom& a) { return a.to_string(); }); }

  /// Same layout, with atoms rendered by `name`.
  std::string to_string(const std::function<std::string(const Atom&)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const Term& t = terms_[i];
      bool negative = t.coefficient.sign() < 0;
      if (i == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      Rational magnitude = negative ? -t.coefficient : t.coefficient;
      if (t.monomial.is_one()) {
        out += magnitude.to_string();
      } else if (magnitude.is_one()) {
        out += t.monomial.to_string(name);
      } else {
        out += magnitude.to_string() + "*" + t.monomial.to_string(name);
      }
    }
    return out;
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw InputError("the zero polynomial has no leading term");
  }

  std::vector<Term> terms_;
};

inline LeadingData leading_data(const Polynomial& p) { return p.leading_data(); }
inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial scale(const Rational& c, const Polynomial& p) { return p.scale(c); }
inline Polynomial mul_monomial(const Monomial& m, const Polynomial& p) { return p.mul_monomial(m); }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial act(const Polynomial& p, const AtomMap& emb) { return p.act(emb); }

inline Polynomial substitute(const Polynomial& p, const std::vector<std::pair<Atom, Polynomial>>& assignment) {
  return p.substitute([&](const Atom& a) -> Polynomial {
    for (const auto& [x, image] : assignment) {
      if (x == a) return image;
    }
    throw InputError("substitution undefined on " + a.to_string());
  });
}

inline void require_in(const Structure& s, const Polynomial& p) {
  for (const Atom& a : p.dom()) s.require(a);
}

namespace detail {

/// Orbit representative of p without scaling. For the equality-atoms reduct the
/// minimum over all renamings onto 1..k is taken.
inline Polynomial renamed_canonical(const Structure& s, const Polynomial& p, bool make_monic) {
  AtomTuple d = p.dom();
  if (!s.is_reduct()) {
    Polynomial q = p.act(AtomMap(d, canonical_image(s, d)));
    return make_monic ? q.monic() : q;
  }
  std::vector<long> ranks(d.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = static_cast<long>(i + 1);
  Polynomial best;
  std::string best_text;
  bool first = true;
  do {
    AtomMap m;
    for (std::size_t i = 0; i < d.size(); ++i) m.set(d[i], Atom::point(ranks[i]));
    Polynomial q = p.act(m);
    if (make_monic) q = q.monic();
    std::string text = q.to_string();
    if (first || text < best_text) {
      best = std::move(q);
      best_text = std::move(text);
      first = false;
    }
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return best;
}

}  // namespace detail

/// Monic orbit representative: dom(p) renamed onto its canonical tuple.
inline Polynomial poly_canonical(const Structure& s, const Polynomial& p) {
  require_in(s, p);
  if (p.is_zero()) return p;
  return detail::renamed_canonical(s, p.monic(), true);
}

/// Some group element maps p onto q exactly.
inline bool poly_orbit_equal(const Structure& s, const Polynomial& p, const Polynomial& q) {
  require_in(s, p);
  require_in(s, q);
  if (p.size() != q.size()) return false;
  return detail::renamed_canonical(s, p, false) == detail::renamed_canonical(s, q, false);
}

}  // namespace eqgb

template <>
struct std::hash<eqgb::Polynomial> {
  std::size_t operator()(const eqgb::Polynomial& p) const { return p.hash(); }
};

#endif  // EQGB_POLYNOMIAL_HPP
