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

#ifndef EQGB_SATURATION_HPP
#define EQGB_SATURATION_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eqgb/monomial.hpp"
#include "eqgb/orbitset.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/structure.hpp"

namespace eqgb {

/// One rewriting step p -> r = p - coefficient * cofactor * act(reducer, embedding).
struct ReductionStep {
  Polynomial reducer;
  AtomMap embedding;
  Monomial cofactor;
  Rational coefficient;
  Polynomial residue;
};

enum class RemainderMode { all, single };

struct RoundReport {
  std::size_t round = 0;
  std::vector<Polynomial> added;
  std::size_t basis_size = 0;
};

struct SaturationOptions {
  std::size_t max_rounds = 64;
  RemainderMode mode = RemainderMode::single;
  /// Worker threads for S-polynomial processing; 0 or 1 runs sequentially.
  std::size_t threads = 1;
  bool check_invariants = true;
  /// In `all` mode, the number of distinct intermediate polynomials one
  /// S-polynomial may visit before it contributes a single normal form
  /// instead of its full remainder set; 0 means unlimited.
  std::size_t state_limit = 0;
  std::function<void(const RoundReport&)> trace;
};

struct SaturationStats {
  std::size_t rounds = 0;
  std::size_t pairs = 0;
  std::size_t steps_checked = 0;
  std::size_t fallbacks = 0;
};

/// The round budget ran out before the basis stabilized.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(OrbitSet partial, std::size_t rounds)
      : std::runtime_error("saturation did not stabilize within " + std::to_string(rounds) + " rounds"),
        partial_(std::move(partial)),
        rounds_(rounds) {}
  const OrbitSet& partial() const { return partial_; }
  std::size_t rounds() const { return rounds_; }

 private:
  OrbitSet partial_;
  std::size_t rounds_;
};

/// Violated algorithmic invariant; indicates a library bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

struct Reducer {
  Polynomial poly;
  Monomial lm;
  Rational lc;
  AtomTuple dom;
  /// dom(LM) first, then the remaining atoms of dom.
  AtomTuple search_order;
  /// unary_key of each atom of search_order.
  AtomTuple keys;
};

inline std::vector<Reducer> reducers_of(const OrbitSet& h) {
  std::vector<Reducer> out;
  out.reserve(h.size());
  for (const Polynomial& q : h.reps()) {
    Reducer r{q, q.lm(), q.lc(), q.dom(), q.lm().dom(), {}};
    for (const Atom& a : r.dom) {
      if (r.lm.exponent(a) == 0) r.search_order.push_back(a);
    }
    for (const Atom& a : r.search_order) r.keys.push_back(unary_key(h.structure(), a));
    out.push_back(std::move(r));
  }
  return out;
}

inline bool subset_sorted(const AtomTuple& a, const AtomTuple& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct StateLimitReached {};

}  // namespace detail

/// Enumerates rewriting steps of p by the orbits of a set of reducers; the
/// embedding image always lies inside dom(p).
class Reduction {
 public:
  Reduction(Structure s, const OrbitSet& h) : structure_(std::move(s)), reducers_(detail::reducers_of(h)) {}

  const Structure& structure() const { return structure_; }

  /// Calls `visit` on each step in deterministic order until it returns false.
  void for_each_step(const Polynomial& p, const std::function<bool(const ReductionStep&)>& visit) const {
    if (p.is_zero()) return;
    const Monomial& lm = p.lm();
    AtomTuple dp, lm_keys, dp_keys;
    bool have_dom = false;
    std::vector<AtomTuple> options;
    for (const detail::Reducer& r : reducers_) {
      if (r.lm.size() > lm.size() || r.lm.degree() > lm.degree()) continue;
      if (!have_dom) {
        dp = p.dom();
        for (const auto& entry : lm.entries()) lm_keys.push_back(unary_key(structure_, entry.first));
        for (const Atom& a : dp) dp_keys.push_back(unary_key(structure_, a));
        have_dom = true;
      }
      if (r.dom.size() > dp.size()) continue;
      // Candidate images, pre-filtered by one-point type; buffers are reused.
      if (options.size() < r.search_order.size()) options.resize(r.search_order.size());
      bool blocked = false;
      std::size_t k = 0;
      for (const auto& [x, e] : r.lm.entries()) {
        AtomTuple& ys = options[k];
        ys.clear();
        std::size_t j = 0;
        for (const auto& [y, f] : lm.entries()) {
          if (f >= e && lm_keys[j] == r.keys[k]) ys.push_back(y);
          ++j;
        }
        ++k;
        if (ys.empty()) {
          blocked = true;
          break;
        }
      }
      for (; !blocked && k < r.search_order.size(); ++k) {
        AtomTuple& ys = options[k];
        ys.clear();
        for (std::size_t j = 0; j < dp.size(); ++j) {
          if (dp_keys[j] == r.keys[k]) ys.push_back(dp[j]);
        }
        blocked = ys.empty();
      }
      if (blocked) continue;
      bool keep_going = search_extendable(structure_, r.search_order, options, [&](const AtomTuple& image) {
        AtomMap emb(r.search_order, image);
        ReductionStep step;
        step.reducer = r.poly;
        step.cofactor = r.lm.rename(emb).quotient_of(lm);
        step.coefficient = p.lc() / r.lc;
        step.residue = p.add_scaled(-step.coefficient, step.cofactor, r.poly.act(emb));
        step.embedding = std::move(emb);
        return visit(step);
      });
      if (!keep_going) return;
    }
  }

  std::vector<ReductionStep> candidates(const Polynomial& p) const {
    std::vector<ReductionStep> out;
    for_each_step(p, [&](const ReductionStep& s) {
      out.push_back(s);
      return true;
    });
    return out;
  }

  bool is_normal(const Polynomial& p) const {
    bool normal = true;
    for_each_step(p, [&](const ReductionStep&) {
      normal = false;
      return false;
    });
    return normal;
  }

 private:
  Structure structure_;
  std::vector<detail::Reducer> reducers_;
};

inline std::vector<ReductionStep> reduction_candidates(const OrbitSet& h, const Polynomial& p) {
  return Reduction(h.structure(), h).candidates(p);
}

/// Exhaustive normal-form sets, memoized on canonical monic forms and
/// transported back along the canonical renaming.
class RemainderEngine {
 public:
  RemainderEngine(const OrbitSet& h, RemainderMode mode = RemainderMode::all, bool check_invariants = true)
      : reduction_(h.structure(), h), mode_(mode), check_(check_invariants) {
    if (h.structure().is_reduct()) throw InputError("remainders are computed in the ordered base structure");
  }

  /// Like `remainders`, but gives up (returning nullopt) once more than
  /// `limit` new intermediate polynomials have been explored.
  std::optional<std::vector<Polynomial>> remainders_within(const Polynomial& p, std::size_t limit) {
    limit_ = limit == 0 ? 0 : visited_ + limit;
    try {
      auto out = transported_remainders(p);
      limit_ = 0;
      return out;
    } catch (const detail::StateLimitReached&) {
      limit_ = 0;
      return std::nullopt;
    }
  }

  /// All normal forms of p, sorted by text and deduplicated exactly.
  std::vector<Polynomial> remainders(const Polynomial& p) {
    std::vector<Polynomial> out = transported_remainders(p);
    std::vector<std::pair<std::string, std::size_t>> order;
    order.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) order.emplace_back(out[i].to_string(), i);
    std::sort(order.begin(), order.end());
    std::vector<Polynomial> sorted;
    sorted.reserve(out.size());
    for (const auto& [text, i] : order) sorted.push_back(std::move(out[i]));
    return sorted;
  }

  std::size_t steps_checked() const { return steps_checked_; }
  std::size_t memo_size() const { return memo_.size(); }
  const Reduction& reduction() const { return reduction_; }

 private:
  std::vector<Polynomial> transported_remainders(const Polynomial& p) {
    if (p.is_zero()) return {Polynomial()};
    const Structure& s = reduction_.structure();
    AtomTuple d = p.dom();
    AtomMap to_canon(d, canonical_image(s, d));
    Rational c = p.lc();
    Polynomial canon = p.scale(c.inverse()).act(to_canon);
    const std::vector<Polynomial>& base = canonical_remainders(canon);
    AtomMap back = to_canon.inverse();
    std::vector<Polynomial> out;
    out.reserve(base.size());
    for (const Polynomial& r : base) out.push_back(r.act(back).scale(c));
    return out;
  }

  const std::vector<Polynomial>& canonical_remainders(const Polynomial& canon) {
    auto it = memo_.find(canon);
    if (it != memo_.end()) return it->second;
    if (limit_ != 0 && visited_ >= limit_) throw detail::StateLimitReached{};
    ++visited_;
    std::vector<Polynomial> result;
    std::unordered_set<Polynomial> seen;
    bool reducible = false;
    reduction_.for_each_step(canon, [&](const ReductionStep& step) {
      reducible = true;
      if (check_) check_step(canon, step);
      for (Polynomial& r : transported_remainders(step.residue)) {
        if (seen.insert(r).second) result.push_back(std::move(r));
      }
      return mode_ == RemainderMode::all;
    });
    if (!reducible) result.push_back(canon);
    return memo_.emplace(canon, std::move(result)).first->second;
  }

  void check_step(const Polynomial& p, const ReductionStep& step) {
    ++steps_checked_;
    const Polynomial& r = step.residue;
    if (!r.is_zero()) {
      if (!revlex_less(r.lm(), p.lm())) {
        throw InvariantViolation("reduction step does not decrease the leading monomial: " + p.to_string() +
                                 " -> " + r.to_string());
      }
      if (!detail::subset_sorted(r.dom(), p.dom())) {
        throw InvariantViolation("reduction step enlarges the domain: " + p.to_string() + " -> " + r.to_string());
      }
    }
  }

  Reduction reduction_;
  RemainderMode mode_;
  bool check_;
  std::size_t steps_checked_ = 0;
  std::size_t limit_ = 0;
  std::size_t visited_ = 0;
  std::unordered_map<Polynomial, std::vector<Polynomial>> memo_;
};

inline std::vector<Polynomial> remainders(const OrbitSet& h, const Polynomial& p) {
  return RemainderEngine(h).remainders(p);
}

/// (L / LT(p)) p - (L / LT(q)) q with L = lcm(LM(p), LM(q)).
inline Polynomial s_polynomial(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw InputError("S-polynomial of the zero polynomial");
  Monomial l = lcm(p.lm(), q.lm());
  Monomial mp = p.lm().quotient_of(l);
  Monomial mq = q.lm().quotient_of(l);
  Rational cp = p.lc().inverse();
  Rational cq = q.lc().inverse();
  Polynomial left = p.mul_monomial(mp, cp);
  Polynomial right = q.mul_monomial(mq, cq);
  if (!(left.lt() == right.lt())) throw InvariantViolation("S-polynomial leading terms do not cancel");
  return left - right;
}

/// Remainders of all S-polynomials over pairs(B, B).
inline OrbitSet sset(const OrbitSet& b, const SaturationOptions& options = {}, SaturationStats* stats = nullptr) {
  const Structure& s = b.structure();
  std::vector<std::pair<Polynomial, Polynomial>> ps = pairs(b, b);
  if (stats) stats->pairs += ps.size();
  std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, ps.size()));
  std::vector<std::vector<Polynomial>> results(workers);
  std::vector<std::size_t> steps(workers, 0);
  std::vector<std::size_t> fallbacks(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      RemainderEngine engine(b, options.mode, options.check_invariants);
      std::optional<RemainderEngine> single;
      for (std::size_t i = w; i < ps.size(); i += workers) {
        Polynomial sp = s_polynomial(ps[i].first, ps[i].second);
        if (sp.is_zero()) continue;
        auto rs = engine.remainders_within(sp, options.mode == RemainderMode::all ? options.state_limit : 0);
        if (!rs) {
          if (!single) single.emplace(b, RemainderMode::single, options.check_invariants);
          rs = single->remainders(sp);
          ++fallbacks[w];
        }
        for (Polynomial& r : *rs) {
          if (!r.is_zero()) results[w].push_back(std::move(r));
        }
      }
      steps[w] = engine.steps_checked() + (single ? single->steps_checked() : 0);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  OrbitSet out(s);
  for (std::size_t w = 0; w < workers; ++w) {
    for (const Polynomial& r : results[w]) out.insert(r);
    if (stats) {
      stats->steps_checked += steps[w];
      stats->fallbacks += fallbacks[w];
    }
  }
  return out;
}

/// Saturates H under S-polynomial remainders until no new orbit appears.
inline OrbitSet weakgb(const OrbitSet& h, const SaturationOptions& options = {}, SaturationStats* stats = nullptr) {
  if (h.structure().is_reduct()) throw InputError("saturation runs in the ordered base structure");
  OrbitSet b = h;
  for (std::size_t round = 1;; ++round) {
    OrbitSet next = sset(b, options, stats);
    if (b.includes(next)) {
      if (stats) stats->rounds = round;
      if (options.trace) options.trace({round, {}, b.size()});
      return b;
    }
    if (round > options.max_rounds) throw BudgetExhausted(b, options.max_rounds);
    RoundReport report;
    report.round = round;
    for (const Polynomial& p : next.reps()) {
      if (b.insert_canonical(p)) report.added.push_back(p);
    }
    report.basis_size = b.size();
    if (options.trace) options.trace(report);
  }
}

}  // namespace eqgb

#endif  // EQGB_SATURATION_HPP
