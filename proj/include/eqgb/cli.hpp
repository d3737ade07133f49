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

#ifndef EQGB_CLI_HPP
#define EQGB_CLI_HPP

// The `egb` front end. Exit status: 0 decided, 1 usage or parse error,
// 2 round budget exhausted (the partial basis is written to stdout).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "eqgb/automaton.hpp"
#include "eqgb/basis.hpp"
#include "eqgb/errors.hpp"
#include "eqgb/ideal.hpp"
#include "eqgb/problem.hpp"
#include "eqgb/rewrite.hpp"
#include "eqgb/saturation.hpp"
#include "eqgb/selftest.hpp"
#include "eqgb/text.hpp"

namespace eqgb::cli {

enum Exit : int { decided = 0, usage = 1, exhausted = 2 };

struct Terminal {
  bool color = false;
};

namespace detail {

using nlohmann::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  Terminal terminal;
  SaturationOptions saturation;
  bool trace = false;
  bool as_json = false;

  std::string paint(const std::string& text, const char* code) const {
    if (!terminal.color) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
  }
  std::string verdict(bool yes) const { return yes ? paint("YES", "32") : paint("NO", "31"); }

  void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

inline json basis_json(const OrbitSet& b) {
  json reps = json::array();
  for (const Polynomial& p : b.reps()) reps.push_back(p.to_string());
  return {{"structure", b.structure().to_string()}, {"basis", reps}};
}

inline IdealFile load_ideal(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return parse_ideal_file(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

inline EquivariantIdeal build(const IdealFile& f, const SaturationOptions& o) {
  return EquivariantIdeal::from_generators(f.structure, f.generators, o);
}

/// Parses a command-line argument, reporting positions relative to it.
template <class F>
auto argument(const std::string& what, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw InputError(what + ": column " + std::to_string(e.column()) + ": " + e.message());
  }
}

inline int cmd_gb(Context& c, const std::string& path) {
  EquivariantIdeal ideal = build(load_ideal(path), c.saturation);
  if (c.as_json) {
    json j = basis_json(ideal.basis());
    j["command"] = "gb";
    j["status"] = "decided";
    c.emit(j);
  } else {
    c.out << print_basis(ideal.basis());
  }
  return decided;
}

inline std::string certificate_line(const CertificateTerm& t) {
  return t.coefficient.to_string() + " * " + t.monomial.to_string() + " * [" + t.rep.to_string() + "] " +
         t.embedding.to_string();
}

inline int cmd_member(Context& c, const std::string& path, const std::string& poly) {
  IdealFile f = load_ideal(path);
  Polynomial p = argument("polynomial", [&] { return parse_polynomial(poly, f.structure); });
  EquivariantIdeal ideal = build(f, c.saturation);
  Certificate certificate;
  bool yes = ideal.member(p, &certificate);
  if (c.as_json) {
    json j{{"command", "member"}, {"status", "decided"}, {"member", yes}};
    if (yes) {
      json terms = json::array();
      for (const CertificateTerm& t : certificate) {
        terms.push_back({{"coefficient", t.coefficient.to_string()},
                         {"monomial", t.monomial.to_string()},
                         {"rep", t.rep.to_string()},
                         {"embedding", t.embedding.to_string()}});
      }
      j["certificate"] = terms;
    }
    c.emit(j);
  } else {
    c.out << c.verdict(yes) << "\n";
    if (yes) {
      for (const CertificateTerm& t : certificate) c.out << "cert: " << certificate_line(t) << "\n";
    }
  }
  return decided;
}

inline int cmd_ideal(Context& c, const std::string& op, const std::string& left, const std::string& right) {
  IdealFile fi = load_ideal(left);
  IdealFile fj = load_ideal(right);
  if (!(fi.structure == fj.structure)) {
    throw InputError("ideal files use different structures: " + fi.structure.to_string() + " and " +
                     fj.structure.to_string());
  }
  EquivariantIdeal i = build(fi, c.saturation);
  EquivariantIdeal j = build(fj, c.saturation);
  if (op == "equal" || op == "includes") {
    bool yes = op == "equal" ? i.equals(j) : i.includes(j);
    if (c.as_json) {
      c.emit({{"command", "ideal " + op}, {"status", "decided"}, {"result", yes}});
    } else {
      c.out << c.verdict(yes) << "\n";
    }
    return decided;
  }
  EquivariantIdeal r = op == "sum" ? i.sum(j, c.saturation)
                       : op == "product" ? i.product(j, c.saturation)
                                         : i.intersect(j, c.saturation);
  if (c.as_json) {
    json out = basis_json(r.basis());
    out["command"] = "ideal " + op;
    out["status"] = "decided";
    c.emit(out);
  } else {
    c.out << print_basis(r.basis());
  }
  return decided;
}

inline int cmd_zeroness(Context& c, const std::string& path) {
  std::string text = read_text_file(path);
  PolynomialAutomaton a = [&] {
    try {
      return parse_automaton_file(text);
    } catch (const ParseError& e) {
      throw InputError(path + ":" + e.what());
    }
  }();
  ZeronessOptions options;
  options.saturation = c.saturation;
  if (c.trace) {
    options.trace = [&c](std::size_t round, const std::vector<Polynomial>& added) {
      c.err << "zeroness round " << round << ": " << added.size() << " new pullbacks\n";
    };
  }
  ZeronessReport report = zeroness_report(a, options);
  std::vector<std::string> basis;
  for (const Polynomial& p : report.basis.reps()) basis.push_back(p.to_string(automaton_atom_name));
  std::string witness = report.witness ? report.witness->to_string(automaton_atom_name) : "";
  if (c.as_json) {
    json j{{"command", "zeroness"}, {"status", "decided"}, {"zero", report.zero},
           {"rounds", report.rounds}, {"basis", basis}};
    if (report.witness) j["witness"] = witness;
    c.emit(j);
  } else {
    c.out << c.verdict(report.zero) << "\n";
    c.out << "rounds: " << report.rounds << "\n";
    for (const std::string& b : basis) c.out << "inv: " << b << "\n";
    if (report.witness) c.out << "witness: " << witness << "\n";
  }
  return decided;
}

inline int cmd_reach(Context& c, const std::string& path, const std::string& from, const std::string& to) {
  std::string text = read_text_file(path);
  MonomialRewriteSystem r = [&] {
    try {
      return parse_rewrite_file(text);
    } catch (const ParseError& e) {
      throw InputError(path + ":" + e.what());
    }
  }();
  Monomial ms = argument("source monomial", [&] { return parse_monomial(from, r.structure); });
  Monomial mt = argument("target monomial", [&] { return parse_monomial(to, r.structure); });
  bool yes = reach(r, ms, mt, c.saturation);
  if (c.as_json) {
    c.emit({{"command", "reach"}, {"status", "decided"}, {"reachable", yes}});
  } else {
    c.out << c.verdict(yes) << "\n";
  }
  return decided;
}

inline int cmd_selftest(Context& c, const std::vector<std::string>& suites, bool suites_given, bool fault) {
  SelftestOptions o;
  o.saturation = c.saturation;
  o.inject_fault = fault;
  if (suites_given) o.suites = suites;
  SelftestReport report = run_selftest(o);
  if (c.as_json) {
    json js = json::array();
    for (const SuiteResult& s : report.suites) {
      js.push_back({{"suite", s.name}, {"checks", s.checks}, {"passed", s.passed}, {"failures", s.failures}});
    }
    c.emit({{"command", "selftest"}, {"status", report.ok() ? "pass" : "fail"}, {"suites", js}});
  } else {
    c.out << report.text();
  }
  return report.ok() ? decided : usage;
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Terminal terminal = {}) {
  CLI::App app{"Equivariant Groebner bases over oligomorphic atom structures", "egb"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t max_rounds = 64;
  std::size_t threads = 1;
  std::string remainders = "single";
  bool trace = false;
  bool as_json = false;
  app.add_option("--max-rounds", max_rounds, "Saturation round budget")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for S-polynomial processing")->capture_default_str();
  app.add_option("--remainders", remainders, "Remainders per S-polynomial: single or all")
      ->check(CLI::IsMember({"single", "all"}))
      ->capture_default_str();
  app.add_flag("--trace", trace, "Report saturation rounds on stderr");
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file, second, third, op;
  auto* gb = app.add_subcommand("gb", "Compute an equivariant Groebner basis");
  gb->add_option("file", file, "Ideal file")->required();

  auto* mem = app.add_subcommand("member", "Decide ideal membership");
  mem->add_option("file", file, "Ideal file")->required();
  mem->add_option("polynomial", second, "Candidate polynomial")->required();

  auto* ideal = app.add_subcommand("ideal", "Ideal operations");
  ideal->require_subcommand(1);
  for (const char* name : {"sum", "product", "intersect", "equal", "includes"}) {
    auto* sub = ideal->add_subcommand(name, std::string("Ideal ") + name);
    sub->add_option("left", file, "Ideal file")->required();
    sub->add_option("right", second, "Ideal file")->required();
    sub->callback([&op, name] { op = name; });
  }

  auto* zero = app.add_subcommand("zeroness", "Decide whether an automaton outputs only 0");
  zero->add_option("file", file, "Automaton file")->required();

  auto* rch = app.add_subcommand("reach", "Decide monomial reachability");
  rch->add_option("file", file, "Rewrite file")->required();
  rch->add_option("source", second, "Source monomial")->required();
  rch->add_option("target", third, "Target monomial")->required();

  std::vector<std::string> suites;
  bool fault = false;
  auto* self = app.add_subcommand("selftest", "Run the bundled oracle suites");
  auto* suites_opt = self->add_option("--suites", suites, "Suites to run (classical, subword, reach)")
                         ->delimiter(',')
                         ->expected(0, -1);
  self->add_flag("--inject-fault", fault, "Use unsaturated bases (negative control)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? decided : usage;
  }

  detail::Context c{out, err, terminal};
  c.saturation.max_rounds = max_rounds;
  c.saturation.threads = threads;
  c.saturation.mode = remainders == "all" ? RemainderMode::all : RemainderMode::single;
  c.trace = trace;
  c.as_json = as_json;
  if (trace) {
    c.saturation.trace = [&err](const RoundReport& r) {
      err << "round " << r.round << ": +" << r.added.size() << " (basis " << r.basis_size << ")\n";
    };
  }

  try {
    if (gb->parsed()) return detail::cmd_gb(c, file);
    if (mem->parsed()) return detail::cmd_member(c, file, second);
    if (ideal->parsed()) return detail::cmd_ideal(c, op, file, second);
    if (zero->parsed()) return detail::cmd_zeroness(c, file);
    if (rch->parsed()) return detail::cmd_reach(c, file, second, third);
    if (self->parsed()) {
      std::erase(suites, std::string());
      for (const std::string& s : suites) {
        const auto& known = selftest_suite_names();
        if (std::find(known.begin(), known.end(), s) == known.end()) {
          throw InputError("unknown selftest suite '" + s + "'");
        }
      }
      return detail::cmd_selftest(c, suites, suites_opt->count() > 0, fault);
    }
  } catch (const BudgetExhausted& e) {
    err << c.paint("budget exhausted", "33") << ": " << e.what() << "\n";
    if (c.as_json) {
      nlohmann::json j = detail::basis_json(e.partial());
      for (CLI::App* sub : app.get_subcommands()) {
        std::string name = sub->get_name();
        for (CLI::App* inner : sub->get_subcommands()) name += " " + inner->get_name();
        j["command"] = name;
      }
      j["status"] = "exhausted";
      j["rounds"] = e.rounds();
      c.emit(j);
    } else {
      out << "# partial basis after " << e.rounds() << " rounds\n" << print_basis(e.partial());
    }
    return exhausted;
  } catch (const InputError& e) {
    err << c.paint("error", "31") << ": " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << c.paint("internal error", "31") << ": " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace eqgb::cli

#endif  // EQGB_CLI_HPP
