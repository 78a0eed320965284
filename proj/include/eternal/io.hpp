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

#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eternal/graph.hpp"
#include "eternal/grid.hpp"
#include "eternal/reduction.hpp"
#include "eternal/solver.hpp"
#include "eternal/strategy.hpp"
#include "json.hpp"

namespace eternal::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Graph files
//
//   c <free text>        comment
//   p ed <n> <m>         header, exactly once, before any e or l line
//   l <id> <name>        optional vertex label
//   e <u> <v>            edge, 0-based ids; exactly m of them

struct GraphFile {
  Graph graph;
  std::vector<std::string> comments;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline std::int64_t parse_int(const std::string& word, int line, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size() || word.empty()) {
    throw ParseError(what + " '" + word + "' is not an integer", line);
  }
  return value;
}

}  // namespace detail

inline GraphFile parse_graph(std::istream& in) {
  GraphFile out;
  std::optional<std::int64_t> n, m;
  int header_line = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> labels;
  std::vector<bool> labelled;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto words = detail::split_words(line);
    if (words.empty()) continue;
    const std::string& tag = words[0];
    if (tag == "c") {
      auto pos = line.find('c');
      std::string text = line.substr(pos + 1);
      if (!text.empty() && text.front() == ' ') text.erase(0, 1);
      out.comments.push_back(text);
    } else if (tag == "p") {
      if (n) throw ParseError("second header (first on line " + std::to_string(header_line) + ")", number);
      if (words.size() != 4 || words[1] != "ed") {
        throw ParseError("malformed header; expected 'p ed <n> <m>'", number);
      }
      n = detail::parse_int(words[2], number, "vertex count");
      m = detail::parse_int(words[3], number, "edge count");
      if (*n < 0 || *m < 0) throw ParseError("negative count in header", number);
      header_line = number;
      labels.assign(static_cast<std::size_t>(*n), "");
      labelled.assign(static_cast<std::size_t>(*n), false);
      for (std::int64_t v = 0; v < *n; ++v) labels[v] = std::to_string(v);
    } else if (tag == "e" || tag == "l") {
      if (!n) throw ParseError("'" + tag + "' line before the header", number);
      if (tag == "e") {
        if (words.size() != 3) throw ParseError("malformed edge; expected 'e <u> <v>'", number);
        auto u = detail::parse_int(words[1], number, "vertex id");
        auto v = detail::parse_int(words[2], number, "vertex id");
        for (auto x : {u, v}) {
          if (x < 0 || x >= *n) {
            throw ParseError("vertex id " + std::to_string(x) + " out of range [0," +
                                 std::to_string(*n) + ")",
                             number);
          }
        }
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), number);
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert(e).second) {
          throw ParseError("duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second),
                           number);
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      } else {
        if (words.size() != 3) throw ParseError("malformed label; expected 'l <id> <name>'", number);
        auto v = detail::parse_int(words[1], number, "vertex id");
        if (v < 0 || v >= *n) {
          throw ParseError("vertex id " + std::to_string(v) + " out of range [0," +
                               std::to_string(*n) + ")",
                           number);
        }
        if (labelled[v]) throw ParseError("second label for vertex " + std::to_string(v), number);
        labelled[v] = true;
        labels[v] = words[2];
      }
    } else {
      throw ParseError("unknown line type '" + tag + "'", number);
    }
  }
  if (!n) throw ParseError("missing header 'p ed <n> <m>'", number);
  if (static_cast<std::int64_t>(edges.size()) != *m) {
    throw ParseError("header declares " + std::to_string(*m) + " edges but " +
                         std::to_string(edges.size()) + " were given",
                     header_line);
  }
  bool any_label = std::find(labelled.begin(), labelled.end(), true) != labelled.end();
  out.graph = Graph(static_cast<int>(*n), edges, any_label ? labels : std::vector<std::string>{});
  return out;
}

inline GraphFile parse_graph_string(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

/// Canonical text: comments, header, labels by id, edges in lexicographic
/// order with u < v.
inline std::string emit_graph(const Graph& g, const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "c" << (c.empty() ? "" : " ") << c << '\n';
  os << "p ed " << g.n() << ' ' << g.edge_count() << '\n';
  if (!g.labels().empty()) {
    for (Vertex v = 0; v < g.n(); ++v) os << "l " << v << ' ' << g.label(v) << '\n';
  }
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

/// Gadget graph with its block layout as comment lines.
inline std::string emit_reduction(const ReductionInstance& r) {
  std::vector<std::string> comments;
  comments.push_back("gadget " + to_string(r.gadget) + " from a source on " +
                     std::to_string(r.source.n()) + " vertices");
  comments.push_back("expected " + to_string(r.relation.target_variant) + " eternal number = " +
                     std::to_string(r.relation.multiplier) + " * " +
                     to_string(r.relation.source_kind) + " number + " +
                     std::to_string(r.relation.addend));
  for (const auto& b : r.layout) {
    std::string line = "block " + b.name;
    for (Vertex v : b.vertices) line += " " + std::to_string(v);
    comments.push_back(line);
  }
  return emit_graph(r.target, comments);
}

// ---------------------------------------------------------------------------
// Attack scripts
//
// Either an explicit list, one attack per line (a vertex id, or "x y" for
// grids), or a single directive line "random <seed> <count>" or
// "adversarial <depth> <count>". Blank lines and lines starting with '#' are
// ignored.

struct AttackScript {
  enum class Kind { List, Random, Adversarial };
  Kind kind = Kind::List;
  std::vector<Vertex> vertices;
  std::vector<grid::Coord> coords;
  std::uint64_t seed = 0;
  int depth = 1;
  int count = 0;
};

inline AttackScript parse_attack_script(std::istream& in, bool grid_coords) {
  AttackScript s;
  bool directive = false, listed = false;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto words = detail::split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    if (words[0] == "random" || words[0] == "adversarial") {
      if (directive || listed) {
        throw ParseError("a directive must be the only attack line", number);
      }
      if (words.size() != 3) {
        throw ParseError("malformed directive; expected '" + words[0] + " <" +
                             (words[0] == "random" ? "seed" : "depth") + "> <count>'",
                         number);
      }
      directive = true;
      auto first = detail::parse_int(words[1], number, words[0] == "random" ? "seed" : "depth");
      auto count = detail::parse_int(words[2], number, "count");
      if (count < 0) throw ParseError("negative attack count", number);
      s.count = static_cast<int>(count);
      if (words[0] == "random") {
        if (first < 0) throw ParseError("negative seed", number);
        s.kind = AttackScript::Kind::Random;
        s.seed = static_cast<std::uint64_t>(first);
      } else {
        if (grid_coords) throw ParseError("grid scripts have no adversarial attacker", number);
        if (first < 1) throw ParseError("adversarial depth must be at least 1", number);
        s.kind = AttackScript::Kind::Adversarial;
        s.depth = static_cast<int>(first);
      }
      continue;
    }
    if (directive) throw ParseError("a directive must be the only attack line", number);
    listed = true;
    if (grid_coords) {
      if (words.size() != 2) throw ParseError("expected a coordinate 'x y'", number);
      s.coords.push_back({detail::parse_int(words[0], number, "x"),
                          detail::parse_int(words[1], number, "y")});
    } else {
      if (words.size() != 1) throw ParseError("expected one vertex id", number);
      auto v = detail::parse_int(words[0], number, "vertex id");
      if (v < 0) throw ParseError("negative vertex id", number);
      s.vertices.push_back(static_cast<Vertex>(v));
    }
  }
  if (!directive) {
    s.count = static_cast<int>(grid_coords ? s.coords.size() : s.vertices.size());
  }
  return s;
}

inline AttackScript parse_attack_script_string(const std::string& text, bool grid_coords) {
  std::istringstream is(text);
  return parse_attack_script(is, grid_coords);
}

// ---------------------------------------------------------------------------
// Structured reports

inline Json to_json(const GuardConfig& c) { return Json(c.counts()); }

inline Json to_json(grid::Coord c) { return Json::array({c.x, c.y}); }

inline Json to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.n();
  j["edges"] = g.edge_count();
  return j;
}

inline Json to_json(const DefenseMove& d) {
  Json moves = Json::array();
  for (const auto& m : d.moving()) moves.push_back(Json::array({m.from, m.to}));
  return moves;
}

inline Json to_json(const Transcript& t) {
  Json rounds = Json::array();
  for (const auto& r : t.rounds) {
    Json jr;
    jr["attack"] = r.attack;
    jr["skipped"] = r.skipped;
    jr["before"] = to_json(r.before);
    jr["moves"] = to_json(r.defense);
    jr["after"] = to_json(r.after);
    jr["valid"] = r.valid;
    rounds.push_back(std::move(jr));
  }
  Json j;
  j["rounds"] = std::move(rounds);
  j["defender_survived"] = t.defender_survived;
  return j;
}

inline Json to_json(const EternalResult& r) {
  Json j;
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["k_max"] = r.k_max;
  j["bounded_failure"] = r.bounded_failure();
  j["non_monotone"] = r.non_monotone;
  Json scanned = Json::array();
  for (const auto& k : r.scanned) {
    Json jk;
    jk["k"] = k.k;
    jk["status"] = to_string(k.status);
    jk["universe"] = k.universe;
    jk["safe_family"] = k.family;
    scanned.push_back(std::move(jk));
  }
  j["scanned"] = std::move(scanned);
  Json witness = Json::array();
  for (const auto& c : r.witness.configs) witness.push_back(to_json(c));
  j["witness_family_size"] = r.witness.configs.size();
  j["witness_family"] = std::move(witness);
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const ReductionReport& r) {
  Json j;
  j["gadget"] = to_string(r.gadget);
  Json s;
  s["vertices"] = r.structure.vertices;
  s["expected_vertices"] = r.structure.expected_vertices;
  s["bipartite"] = optional_json(r.structure.bipartite);
  s["diameter"] = optional_json(r.structure.diameter);
  s["split"] = optional_json(r.structure.split);
  s["ok"] = r.structure.ok;
  j["structure"] = std::move(s);
  j["source_parameter"] = r.source_parameter;
  j["expected_value"] = r.expected_value;
  j["partial"] = r.partial;
  if (r.partial) j["partial_reason"] = r.partial_reason;
  j["target_value"] = optional_json(r.target_value);
  j["relation_holds"] = optional_json(r.relation_holds);
  j["connected_value"] = optional_json(r.connected_value);
  j["connected_supports"] = optional_json(r.connected_supports);
  j["forward_strategy_budget"] = optional_json(r.forward_strategy_budget);
  j["forward_strategy_connected"] = optional_json(r.forward_strategy_connected);
  j["pigeonhole_checked"] = optional_json(r.pigeonhole_checked);
  j["pigeonhole_holds"] = optional_json(r.pigeonhole_holds);
  j["ok"] = r.ok();
  return j;
}

inline Json to_json(const grid::InvariantReport& r) {
  Json j;
  j["grid"] = grid::to_string(r.model);
  j["offset"] = to_json(r.offset);
  j["radius"] = r.radius;
  j["interior_vertices"] = r.interior_vertices;
  Json hist = Json::object();
  for (auto [index, count] : r.index_histogram) hist[std::to_string(index)] = count;
  j["index_histogram"] = std::move(hist);
  j["all_indices_one"] = r.all_ones();
  j["partition_failures"] = r.partition_failures;
  j["density"] = std::to_string(r.density_numerator) + "/" + std::to_string(r.density_denominator);
  j["density_matches"] = r.density_matches();
  j["ok"] = r.ok();
  return j;
}

inline Json to_json(const grid::GridTranscript& t) {
  Json rounds = Json::array();
  for (const auto& r : t.rounds) {
    Json jr;
    jr["attack"] = to_json(r.attack);
    jr["skipped"] = r.skipped;
    jr["offset_before"] = to_json(r.before.offset);
    if (!r.skipped) {
      jr["dominator"] = to_json(r.dominator);
      jr["direction"] = to_json(r.direction);
      jr["even_shift"] = to_json(r.field.even_shift);
      jr["odd_shift"] = to_json(r.field.odd_shift);
    }
    jr["offset_after"] = to_json(r.after.offset);
    jr["translation"] = to_json(r.translation);
    jr["valid"] = r.valid();
    rounds.push_back(std::move(jr));
  }
  Json j;
  j["grid"] = grid::to_string(t.model);
  j["radius"] = t.radius;
  j["rounds"] = std::move(rounds);
  j["defender_survived"] = t.defender_survived;
  return j;
}

/// Top-level report skeleton; fields appear in a fixed order.
inline Json make_report(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = Json::object();
  j["results"] = Json::object();
  j["verdicts"] = Json::object();
  j["timings"] = Json::object();
  return j;
}

/// Report text with timings removed, for determinism comparisons.
inline std::string comparable(Json report) {
  report.erase("timings");
  return report.dump(2);
}

}  // namespace eternal::io
