// Copyright 2026 The eternal-guard Authors
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

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eternal/io.hpp"

namespace eternal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kBudgetEnv = "ETERNAL_GUARD_BUDGET";

namespace detail {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

inline io::GraphFile load_graph(const std::string& path) {
  try {
    return io::parse_graph_string(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline Kind parse_kind(const std::string& s) {
  if (s == "domination") return Kind::Domination;
  if (s == "roman") return Kind::Roman;
  return Kind::Italian;
}

inline double budget_from_env() {
  const char* raw = std::getenv(kBudgetEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultConfigBudget;
  char* end = nullptr;
  double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0)) {
    throw UsageError(std::string(kBudgetEnv) + " must be a positive number, got '" + raw + "'");
  }
  return v;
}

inline Json coord_list(const std::vector<grid::Coord>& cs) {
  Json j = Json::array();
  for (auto c : cs) j.push_back(io::to_json(c));
  return j;
}

struct Common {
  std::string report_path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void finish(Json& report, std::ostream& out) const {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report["timings"]["elapsed_ms"] = ms.count();
    if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n", out);
  }
};

}  // namespace detail

/// Runs one command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`; `in` feeds the grid-play loop.
/// Returns 0 on success, 1 when a checked invariant fails and 2 on usage or
/// input errors.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  using detail::Json;
  CLI::App app{"Eternal domination toolkit: exact solver, floating-guard strategies, "
               "reduction gadgets and infinite-grid patrols.",
               "eternal-guard"};
  app.require_subcommand(1, 1);
  detail::Common common;

  std::string graph_path, variant = "domination", gadget, grid_name = "t4", script_path, svg_path,
                          output_path;
  bool connected = false, no_stacking = false, render = false;
  int max_k = 0, rounds = 100;
  std::int64_t radius = 12;
  std::uint64_t seed = 1;
  std::vector<int> core;
  std::vector<std::int64_t> offset;

  const auto variants = CLI::IsMember({"domination", "roman", "italian"});
  const auto grids = CLI::IsMember({"t4", "t8", "t3", "t6"}, CLI::ignore_case);
  const auto gadgets = CLI::IsMember({"bipartite", "split-roman", "split-italian"});
  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--report", common.report_path, "Write a JSON run report to this path ('-' for stdout)");
  };

  auto* st = app.add_subcommand("static", "Static domination number by exhaustive search");
  st->add_option("graph", graph_path, "Graph file")->required();
  st->add_option("--variant", variant, "domination, roman or italian")->check(variants);
  st->add_flag("--connected", connected, "Require a connected support");
  add_report(st);

  auto* so = app.add_subcommand("solve", "Eternal domination number by the exact solver");
  so->add_option("graph", graph_path, "Graph file")->required();
  so->add_option("--variant", variant, "domination, roman or italian")->check(variants);
  so->add_flag("--connected", connected, "Require connected supports");
  so->add_option("--max-k", max_k, "Largest guard budget to try (default: vertex count)")
      ->check(CLI::PositiveNumber);
  so->add_flag("--no-stacking", no_stacking, "At most one guard per vertex");
  add_report(so);

  auto* si = app.add_subcommand("simulate", "Play a floating-guard strategy against an attacker");
  si->add_option("graph", graph_path, "Graph file")->required();
  si->add_option("--variant", variant, "domination, roman or italian")->check(variants);
  si->add_option("--core", core,
                 "Core vertex ids (domination, roman) or one value per vertex (italian); "
                 "default: a minimum connected core")
      ->delimiter(',');
  si->add_option("--script", script_path, "Attack script; default: random attacks");
  si->add_option("--seed", seed, "Seed for random attacks");
  si->add_option("--rounds", rounds, "Number of rounds")->check(CLI::NonNegativeNumber);
  add_report(si);

  auto* re = app.add_subcommand("reduce", "Build a reduction gadget graph");
  re->add_option("graph", graph_path, "Source graph file")->required();
  re->add_option("--gadget", gadget, "bipartite, split-roman or split-italian")
      ->required()
      ->check(gadgets);
  re->add_option("--output", output_path, "Write the gadget graph here instead of stdout");
  add_report(re);

  auto* vr = app.add_subcommand("verify-reduction", "Build a gadget and verify its equivalence");
  vr->add_option("graph", graph_path, "Source graph file")->required();
  vr->add_option("--gadget", gadget, "bipartite, split-roman or split-italian")
      ->required()
      ->check(gadgets);
  add_report(vr);

  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", grid_name, "t4, t8, t3 or t6")->check(grids);
    sub->add_option("--radius", radius, "Window half-width (at least 3)")->check(CLI::Range(3, 1000));
  };
  auto* gv = app.add_subcommand("grid-verify", "Check strong optimality of a grid pattern on a window");
  add_grid(gv);
  gv->add_option("--offset", offset, "Pattern offset 'x,y'")->delimiter(',')->expected(2);
  add_report(gv);

  auto* gs = app.add_subcommand("grid-simulate", "Defend a grid pattern against an attacker");
  add_grid(gs);
  gs->add_option("--script", script_path, "Attack script of 'x y' lines or a random directive");
  gs->add_option("--seed", seed, "Seed for random attacks");
  gs->add_option("--rounds", rounds, "Number of rounds")->check(CLI::NonNegativeNumber);
  gs->add_flag("--render", render, "Print the window after the last round");
  gs->add_option("--svg", svg_path, "Write an SVG drawing of the final window");
  add_report(gs);

  auto* gp = app.add_subcommand("grid-play", "Interactive attack loop on a grid pattern");
  add_grid(gp);
  add_report(gp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const double budget = detail::budget_from_env();
    Json report;
    int code = kExitOk;
    const Variant var{detail::parse_kind(variant), connected};

    if (st->parsed()) {
      auto gf = detail::load_graph(graph_path);
      report = io::make_report("static");
      report["inputs"]["graph"] = graph_path;
      report["inputs"]["graph_summary"] = io::to_json(gf.graph);
      report["inputs"]["variant"] = to_string(var);
      auto r = static_number(gf.graph, var);
      report["results"]["static_number"] = r.weight;
      report["results"]["witness"] = io::to_json(r.witness);
      out << to_string(var) << " number: " << r.weight << "\nwitness: " << r.witness << "\n";
    } else if (so->parsed()) {
      auto gf = detail::load_graph(graph_path);
      SolverOptions opts;
      opts.budget = budget;
      opts.stacking = !no_stacking;
      int k = max_k > 0 ? max_k : std::max(1, gf.graph.n());
      report = io::make_report("solve");
      report["inputs"]["graph"] = graph_path;
      report["inputs"]["graph_summary"] = io::to_json(gf.graph);
      report["inputs"]["variant"] = to_string(var);
      report["inputs"]["max_k"] = k;
      report["inputs"]["stacking"] = opts.stacking;
      report["inputs"]["budget"] = budget;
      auto r = eternal_number(gf.graph, var, k, opts);
      report["results"]["eternal_number"] = io::to_json(r);
      if (r.value) {
        out << "eternal " << to_string(var) << " number: " << *r.value << "\n";
      } else {
        out << "no winning budget up to k = " << k << " (static lower bound " << r.lower_bound
            << ")\n";
      }
      if (r.non_monotone) out << "note: winning is not monotone in k on this graph\n";
    } else if (si->parsed()) {
      auto gf = detail::load_graph(graph_path);
      const Graph& g = gf.graph;
      Policy policy = [&] {
        if (var.kind == Kind::Italian) {
          if (core.empty()) return make_floating_policy(g, static_number(g, {Kind::Italian, true}).witness);
          return make_floating_policy(g, GuardConfig(core));
        }
        std::vector<Vertex> z = core.empty() ? min_connected_dominating_set(g) : core;
        return make_floating_policy(g, var.kind, z);
      }();
      AttackerSpec attacker = AttackerSpec::random(seed);
      int n_rounds = rounds;
      if (!script_path.empty()) {
        auto script = io::parse_attack_script_string(detail::read_file(script_path), false);
        switch (script.kind) {
          case io::AttackScript::Kind::List:
            attacker = AttackerSpec::scripted(script.vertices);
            n_rounds = script.count;
            break;
          case io::AttackScript::Kind::Random:
            attacker = AttackerSpec::random(script.seed);
            n_rounds = script.count;
            break;
          case io::AttackScript::Kind::Adversarial:
            attacker = AttackerSpec::adversarial(script.depth);
            n_rounds = script.count;
            break;
        }
      }
      report = io::make_report("simulate");
      report["inputs"]["graph"] = graph_path;
      report["inputs"]["graph_summary"] = io::to_json(g);
      report["inputs"]["policy"] = to_string(policy.kind());
      report["inputs"]["core"] = io::to_json(policy.core());
      report["inputs"]["rounds"] = n_rounds;
      report["inputs"]["attacker"] = attacker.mode == AttackerSpec::Mode::Script ? "script"
                                     : attacker.mode == AttackerSpec::Mode::Random ? "random"
                                                                                   : "adversarial";
      if (attacker.mode == AttackerSpec::Mode::Random) report["inputs"]["seed"] = attacker.seed;
      if (attacker.mode == AttackerSpec::Mode::Adversarial) report["inputs"]["depth"] = attacker.depth;
      report["results"]["budget"] = policy.budget();
      auto t = simulate(g, policy, attacker, n_rounds);
      report["results"]["transcript"] = io::to_json(t);
      report["verdicts"]["defender_survived"] = t.defender_survived;
      int skipped = 0;
      for (const auto& r : t.rounds) skipped += r.skipped ? 1 : 0;
      out << to_string(policy.kind()) << " with " << policy.budget() << " guards: "
          << t.rounds.size() << " rounds";
      if (skipped) out << " (" << skipped << " forfeited)";
      out << ", defender " << (t.defender_survived ? "survived" : "failed") << "\n";
      if (!t.defender_survived) code = kExitViolation;
    } else if (re->parsed()) {
      auto gf = detail::load_graph(graph_path);
      auto r = build_reduction(gf.graph, parse_gadget(gadget));
      std::string text = io::emit_reduction(r);
      report = io::make_report("reduce");
      report["inputs"]["graph"] = graph_path;
      report["inputs"]["gadget"] = gadget;
      report["results"]["target"] = io::to_json(r.target);
      Json layout = Json::object();
      for (const auto& b : r.layout) layout[b.name] = b.vertices;
      report["results"]["layout"] = std::move(layout);
      if (output_path.empty()) {
        out << text;
      } else {
        detail::write_file(output_path, text, out);
        out << "wrote " << r.target.n() << "-vertex gadget to " << output_path << "\n";
      }
    } else if (vr->parsed()) {
      auto gf = detail::load_graph(graph_path);
      ReductionOptions opts;
      opts.budget = budget;
      opts.seed = seed;
      auto r = verify_reduction(gf.graph, parse_gadget(gadget), opts);
      report = io::make_report("verify-reduction");
      report["inputs"]["graph"] = graph_path;
      report["inputs"]["gadget"] = gadget;
      report["inputs"]["budget"] = budget;
      report["results"]["reduction"] = io::to_json(r);
      report["verdicts"]["ok"] = r.ok();
      report["verdicts"]["partial"] = r.partial;
      out << gadget << ": source parameter " << r.source_parameter << ", expected "
          << r.expected_value << ", solver ";
      if (r.target_value) {
        out << *r.target_value;
      } else {
        out << (r.partial ? "skipped" : "none up to expected + 1");
      }
      out << "; structure " << (r.structure.ok ? "ok" : "FAILED") << "\n";
      if (r.partial) {
        out << "partial report: " << r.partial_reason << "\n";
        if (!r.structure.ok) code = kExitViolation;
      } else {
        out << "relation " << (r.ok() ? "holds" : "FAILS") << "\n";
        if (!r.ok()) code = kExitViolation;
      }
    } else if (gv->parsed()) {
      grid::PatrolState s{grid::parse_model(grid_name), {}};
      if (offset.size() == 2) s.offset = {offset[0], offset[1]};
      auto r = grid::verify_window(s, radius);
      report = io::make_report("grid-verify");
      report["inputs"]["grid"] = grid::to_string(s.model);
      report["inputs"]["radius"] = radius;
      report["inputs"]["offset"] = io::to_json(s.offset);
      report["results"]["window"] = io::to_json(r);
      report["verdicts"]["ok"] = r.ok();
      out << grid::to_string(s.model) << " radius " << radius << ": " << r.interior_vertices
          << " interior vertices, " << (r.all_ones() ? "all indices 1" : "index violations")
          << ", partition failures " << r.partition_failures << ", density "
          << r.density_numerator << "/" << r.density_denominator << "\n";
      if (!r.ok()) code = kExitViolation;
    } else if (gs->parsed()) {
      auto model = grid::parse_model(grid_name);
      grid::GridAttacker attacker = grid::GridAttacker::random(seed);
      int n_rounds = rounds;
      if (!script_path.empty()) {
        auto script = io::parse_attack_script_string(detail::read_file(script_path), true);
        if (script.kind == io::AttackScript::Kind::List) {
          attacker = grid::GridAttacker::scripted(script.coords);
        } else {
          attacker = grid::GridAttacker::random(script.seed);
        }
        n_rounds = script.count;
      }
      auto t = grid::simulate_grid(model, attacker, n_rounds, radius);
      report = io::make_report("grid-simulate");
      report["inputs"]["grid"] = grid::to_string(model);
      report["inputs"]["radius"] = radius;
      report["inputs"]["rounds"] = n_rounds;
      report["inputs"]["attacker"] =
          attacker.mode == grid::GridAttacker::Mode::Script ? "script" : "random";
      if (attacker.mode == grid::GridAttacker::Mode::Random) report["inputs"]["seed"] = attacker.seed;
      report["results"]["transcript"] = io::to_json(t);
      report["verdicts"]["defender_survived"] = t.defender_survived;
      grid::PatrolState last{model, {}};
      if (!t.rounds.empty()) last = t.rounds.back().after;
      out << grid::to_string(model) << ": " << t.rounds.size() << " rounds, defender "
          << (t.defender_survived ? "survived" : "failed") << ", final offset " << last.offset
          << "\n";
      if (render) out << grid::render_window(last, std::min<std::int64_t>(radius, 12));
      if (!svg_path.empty()) detail::write_file(svg_path, grid::render_svg(last, radius), out);
      if (!t.defender_survived) code = kExitViolation;
    } else if (gp->parsed()) {
      auto model = grid::parse_model(grid_name);
      grid::PatrolState s{model, {}};
      const std::int64_t view = std::min<std::int64_t>(radius, 8);
      report = io::make_report("grid-play");
      report["inputs"]["grid"] = grid::to_string(model);
      report["inputs"]["radius"] = radius;
      std::vector<grid::Coord> attacks;
      out << grid::render_window(s, view);
      std::string line;
      while (true) {
        out << "attack x y> " << std::flush;
        if (!std::getline(in, line)) break;
        auto words = io::detail::split_words(line);
        if (words.empty()) continue;
        if (words[0] == "quit" || words[0] == "q") break;
        grid::Coord a;
        try {
          if (words.size() != 2) throw ParseError("expected 'x y'", 1);
          a = {io::detail::parse_int(words[0], 1, "x"), io::detail::parse_int(words[1], 1, "y")};
        } catch (const ParseError&) {
          out << "enter two integers, or quit\n";
          continue;
        }
        if (grid::chebyshev(a) > radius - 1) {
          out << a << " is outside the window\n";
          continue;
        }
        if (s.guarded(a)) {
          out << a << " is guarded\n";
          continue;
        }
        auto round = grid::checked_round(s, a, radius);
        attacks.push_back(a);
        out << grid::render_window(s, view, {a, round.field});
        out << "dominator " << round.dominator << ", offset " << s.offset << " -> "
            << round.after.offset << (round.valid() ? "" : "  INVALID") << "\n";
        s = round.after;
        out << grid::render_window(s, view);
        if (!round.valid()) {
          code = kExitViolation;
          break;
        }
      }
      out << "\n";
      report["inputs"]["attacks"] = detail::coord_list(attacks);
      report["results"]["final_offset"] = io::to_json(s.offset);
      report["verdicts"]["ok"] = code == kExitOk;
    }
    common.finish(report, out);
    return code;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace eternal::cli
