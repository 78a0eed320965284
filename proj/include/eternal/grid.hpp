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
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eternal/errors.hpp"

namespace eternal::grid {

enum class GridModel { T4, T8, T3, T6 };

inline std::string to_string(GridModel m) {
  switch (m) {
    case GridModel::T4: return "t4";
    case GridModel::T8: return "t8";
    case GridModel::T3: return "t3";
    case GridModel::T6: return "t6";
  }
  return "?";
}

/// Throws DomainError for anything but t4, t8, t3 or t6 (case-insensitive).
inline GridModel parse_model(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (name == "t4") return GridModel::T4;
  if (name == "t8") return GridModel::T8;
  if (name == "t3") return GridModel::T3;
  if (name == "t6") return GridModel::T6;
  throw DomainError("unknown grid '" + name + "' (expected t4, t8, t3 or t6)");
}

struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
  friend Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const Coord&, const Coord&) = default;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

inline std::ostream& operator<<(std::ostream& os, Coord c) {
  return os << '(' << c.x << ',' << c.y << ')';
}

inline std::string to_string(Coord c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

inline bool even_sum(Coord c) { return ((c.x + c.y) & 1) == 0; }

inline std::int64_t chebyshev(Coord c) { return std::max(c.x < 0 ? -c.x : c.x, c.y < 0 ? -c.y : c.y); }

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Neighbours of `v` in the model's infinite grid.
inline std::vector<Coord> grid_neighbors(GridModel m, Coord v) {
  const auto [x, y] = v;
  switch (m) {
    case GridModel::T4:
      return {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
    case GridModel::T8:
      return {{x + 1, y},     {x - 1, y},     {x, y + 1},     {x, y - 1},
              {x + 1, y + 1}, {x - 1, y - 1}, {x + 1, y - 1}, {x - 1, y + 1}};
    case GridModel::T3:
      return {{x, y + 1}, {x, y - 1}, {even_sum(v) ? x + 1 : x - 1, y}};
    case GridModel::T6:
      return {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}, {x - 1, y - 1}, {x + 1, y + 1}};
  }
  return {};
}

inline bool grid_adjacent(GridModel m, Coord a, Coord b) {
  auto adj = grid_neighbors(m, a);
  return std::find(adj.begin(), adj.end(), b) != adj.end();
}

/// Whether `v` lies in the model's base pattern shifted by `t`.
///
///   T4: 2x + y = 0 (mod 5)
///   T8: x = y = 0 (mod 3)
///   T6: x - 3y = 0 (mod 7)
///   T3: even-sum points of the lattice spanned by (2,2) and (3,-1), plus
///       each of those shifted by (-1,0)
inline bool pattern_member(GridModel m, Coord t, Coord v) {
  const Coord p = v - t;
  switch (m) {
    case GridModel::T4: return floor_mod(2 * p.x + p.y, 5) == 0;
    case GridModel::T8: return floor_mod(p.x, 3) == 0 && floor_mod(p.y, 3) == 0;
    case GridModel::T6: return floor_mod(p.x - 3 * p.y, 7) == 0;
    case GridModel::T3: {
      // (x,y) = a(2,2) + b(3,-1) gives b = (x - y) / 4 and a = (y + b) / 2.
      Coord q = even_sum(p) ? p : Coord{p.x + 1, p.y};
      if (floor_mod(q.x - q.y, 4) != 0) return false;
      std::int64_t b = (q.x - q.y) / 4;
      return floor_mod(q.y + b, 2) == 0;
    }
  }
  return false;
}

/// The pattern vertex in N[v]. Throws InvariantViolation unless there is
/// exactly one.
inline Coord unique_dominator(GridModel m, Coord t, Coord v) {
  std::optional<Coord> found;
  int count = 0;
  if (pattern_member(m, t, v)) {
    found = v;
    ++count;
  }
  for (Coord u : grid_neighbors(m, v)) {
    if (pattern_member(m, t, u)) {
      found = u;
      ++count;
    }
  }
  if (count != 1) {
    throw InvariantViolation(to_string(m) + " vertex " + to_string(v) + " has domination index " +
                             std::to_string(count));
  }
  return *found;
}

/// Guards sit exactly on the base pattern translated by `offset`.
struct PatrolState {
  GridModel model = GridModel::T4;
  Coord offset;

  bool guarded(Coord v) const { return pattern_member(model, offset, v); }
  friend bool operator==(const PatrolState&, const PatrolState&) = default;
};

/// How every guard moves in one defense: guards on even-sum vertices shift
/// by `even_shift`, the rest by `odd_shift`. Outside T3 both shifts agree.
struct MoveField {
  Coord even_shift;
  Coord odd_shift;

  Coord shift_for(Coord guard) const { return even_sum(guard) ? even_shift : odd_shift; }

  /// (from, to) for every guard of `before` within Chebyshev radius `r`,
  /// in row-major order.
  std::vector<std::pair<Coord, Coord>> moves(const PatrolState& before, std::int64_t r) const {
    std::vector<std::pair<Coord, Coord>> out;
    for (std::int64_t y = -r; y <= r; ++y) {
      for (std::int64_t x = -r; x <= r; ++x) {
        Coord g{x, y};
        if (before.guarded(g)) out.emplace_back(g, g + shift_for(g));
      }
    }
    return out;
  }
};

struct Defense {
  PatrolState next;
  Coord dominator;
  /// attacked - dominator
  Coord direction;
  MoveField field;
};

namespace detail {

// Defense for a T3 dominator on an even-sum vertex: (direction, even-sum
// guard shift, odd-sum guard shift).
struct HexRule {
  Coord direction;
  Coord even_shift;
  Coord odd_shift;
};

inline constexpr HexRule kHexEvenRules[] = {
    {{0, 1}, {0, 1}, {0, -1}},
    {{1, 0}, {1, 0}, {0, 1}},
    {{0, -1}, {0, -1}, {-1, 0}},
};

// The map (x,y) -> (-1-x, -y) is a grid automorphism that swaps the two
// parity classes and carries the pattern onto itself, so a dominator on an
// odd-sum vertex is handled by conjugating the even rules with it.
inline MoveField hex_field(bool dominator_even, Coord d) {
  if (dominator_even) {
    for (const auto& r : kHexEvenRules) {
      if (r.direction == d) return {r.even_shift, r.odd_shift};
    }
  } else {
    Coord mirrored{-d.x, -d.y};
    for (const auto& r : kHexEvenRules) {
      if (r.direction == mirrored) {
        return {{-r.odd_shift.x, -r.odd_shift.y}, {-r.even_shift.x, -r.even_shift.y}};
      }
    }
  }
  throw InvariantViolation("no hexagonal defense for direction " + to_string(d));
}

}  // namespace detail

/// Moves every guard so that the attacked vertex is covered and the guards
/// again form a translate of the base pattern. Throws IllegalAttackError if
/// the vertex is guarded and DomainError for a T3 offset with odd sum.
inline Defense grid_defend(const PatrolState& s, Coord attacked) {
  if (s.guarded(attacked)) {
    throw IllegalAttackError("vertex " + to_string(attacked) + " is guarded");
  }
  if (s.model == GridModel::T3 && !even_sum(s.offset)) {
    throw DomainError("T3 offsets must have an even coordinate sum");
  }
  Defense out;
  out.dominator = unique_dominator(s.model, s.offset, attacked);
  out.direction = attacked - out.dominator;
  out.next.model = s.model;
  if (s.model != GridModel::T3) {
    out.field = {out.direction, out.direction};
    out.next.offset = s.offset + out.direction;
    return out;
  }
  out.field = detail::hex_field(even_sum(out.dominator), out.direction);
  // Every guard changes parity, so the odd-sum guard at offset - (1,0)
  // becomes an even-sum anchor of the new translate.
  Coord anchor = s.offset - Coord{1, 0};
  out.next.offset = anchor + out.field.odd_shift;
  return out;
}

// ---------------------------------------------------------------------------
// Window verification

/// Side of an axis-aligned square whose translates tile the pattern.
inline std::int64_t period(GridModel m) {
  switch (m) {
    case GridModel::T4: return 5;
    case GridModel::T8: return 3;
    case GridModel::T3: return 8;
    case GridModel::T6: return 7;
  }
  return 1;
}

inline std::int64_t closed_neighborhood_size(GridModel m) {
  return static_cast<std::int64_t>(grid_neighbors(m, {0, 0}).size()) + 1;
}

struct InvariantReport {
  GridModel model = GridModel::T4;
  Coord offset;
  std::int64_t radius = 0;
  std::int64_t interior_vertices = 0;
  /// domination index -> number of interior vertices with that index
  std::map<int, std::int64_t> index_histogram;
  /// Interior vertices not covered exactly once by the closed
  /// neighbourhoods of the guards.
  std::int64_t partition_failures = 0;
  std::int64_t density_numerator = 0;
  std::int64_t density_denominator = 1;

  bool all_ones() const {
    return index_histogram.size() == 1 && index_histogram.begin()->first == 1;
  }
  bool density_matches() const {
    return density_numerator == 1 && density_denominator == closed_neighborhood_size(model);
  }
  bool ok() const { return all_ones() && partition_failures == 0 && density_matches(); }
};

/// Checks every vertex whose closed neighbourhood fits in the window
/// |x|, |y| <= radius, and measures guard density on a period tile anchored
/// at the offset. Throws DomainError for radius < 3.
inline InvariantReport verify_window(const PatrolState& s, std::int64_t radius) {
  if (radius < 3) throw DomainError("window radius must be at least 3");
  InvariantReport rep;
  rep.model = s.model;
  rep.offset = s.offset;
  rep.radius = radius;
  const std::int64_t inner = radius - 1;
  const std::int64_t side = 2 * radius + 1;
  auto idx = [&](Coord c) { return (c.y + radius) * side + (c.x + radius); };

  for (std::int64_t y = -inner; y <= inner; ++y) {
    for (std::int64_t x = -inner; x <= inner; ++x) {
      Coord v{x, y};
      int index = s.guarded(v) ? 1 : 0;
      for (Coord u : grid_neighbors(s.model, v)) index += s.guarded(u) ? 1 : 0;
      ++rep.index_histogram[index];
      ++rep.interior_vertices;
    }
  }

  // Spread each guard's closed neighbourhood over the window and count hits.
  std::vector<int> cover(static_cast<std::size_t>(side * side), 0);
  for (std::int64_t y = -radius; y <= radius; ++y) {
    for (std::int64_t x = -radius; x <= radius; ++x) {
      Coord g{x, y};
      if (!s.guarded(g)) continue;
      ++cover[idx(g)];
      for (Coord u : grid_neighbors(s.model, g)) {
        if (chebyshev(u) <= radius) ++cover[idx(u)];
      }
    }
  }
  for (std::int64_t y = -inner; y <= inner; ++y) {
    for (std::int64_t x = -inner; x <= inner; ++x) {
      if (cover[idx({x, y})] != 1) ++rep.partition_failures;
    }
  }

  const std::int64_t p = period(s.model);
  std::int64_t guards = 0;
  for (std::int64_t dy = 0; dy < p; ++dy) {
    for (std::int64_t dx = 0; dx < p; ++dx) {
      guards += s.guarded(s.offset + Coord{dx, dy}) ? 1 : 0;
    }
  }
  std::int64_t g = std::gcd(guards, p * p);
  rep.density_numerator = g ? guards / g : 0;
  rep.density_denominator = g ? (p * p) / g : 1;
  return rep;
}

// ---------------------------------------------------------------------------
// Simulation

struct GridAttacker {
  enum class Mode { Script, Random };
  Mode mode = Mode::Random;
  std::vector<Coord> script;
  std::uint64_t seed = 0;

  static GridAttacker scripted(std::vector<Coord> s) { return {Mode::Script, std::move(s), 0}; }
  static GridAttacker random(std::uint64_t seed) { return {Mode::Random, {}, seed}; }
};

struct GridRound {
  PatrolState before;
  Coord attack;
  /// Scripted attack on a guarded vertex: the attacker forfeits the round.
  bool skipped = false;
  Coord dominator;
  Coord direction;
  MoveField field;
  PatrolState after;
  /// after.offset - before.offset
  Coord translation;
  bool moves_legal = true;
  bool attack_covered = true;
  /// The moved guards coincide with the new translate on the window.
  bool translate_matches = true;
  bool index_all_ones = true;

  bool valid() const { return moves_legal && attack_covered && translate_matches && index_all_ones; }
};

struct GridTranscript {
  GridModel model = GridModel::T4;
  std::int64_t radius = 0;
  std::vector<GridRound> rounds;
  bool defender_survived = true;
};

/// Checks one defense on the window of radius `r`: edge-legal moves, the
/// attacked vertex covered, post-move guards equal to the new translate, and
/// domination index one everywhere inside.
inline GridRound checked_round(const PatrolState& before, Coord attack, std::int64_t r) {
  GridRound round;
  round.before = before;
  round.attack = attack;
  Defense d = grid_defend(before, attack);
  round.dominator = d.dominator;
  round.direction = d.direction;
  round.field = d.field;
  round.after = d.next;
  round.translation = d.next.offset - before.offset;

  std::set<Coord> landed;
  round.attack_covered = false;
  for (const auto& [from, to] : d.field.moves(before, r + 1)) {
    if (from != to && !grid_adjacent(before.model, from, to)) round.moves_legal = false;
    if (to == attack) round.attack_covered = true;
    if (chebyshev(to) <= r) landed.insert(to);
  }
  std::set<Coord> expected;
  for (std::int64_t y = -r; y <= r; ++y) {
    for (std::int64_t x = -r; x <= r; ++x) {
      if (d.next.guarded({x, y})) expected.insert({x, y});
    }
  }
  round.translate_matches = landed == expected;
  round.index_all_ones = verify_window(d.next, r).all_ones();
  return round;
}

/// Plays `rounds` attacks on vertices within radius - 1 of the origin.
/// Throws DomainError for a scripted attack outside that range.
inline GridTranscript simulate_grid(GridModel m, const GridAttacker& attacker, int rounds,
                                    std::int64_t radius, Coord start = {}) {
  if (radius < 3) throw DomainError("window radius must be at least 3");
  GridTranscript t;
  t.model = m;
  t.radius = radius;
  PatrolState state{m, start};
  std::mt19937_64 rng(attacker.seed);
  const std::int64_t reach = radius - 1;
  const auto span = static_cast<std::uint64_t>(2 * reach + 1);
  for (int r = 0; r < rounds; ++r) {
    Coord target;
    if (attacker.mode == GridAttacker::Mode::Script) {
      if (static_cast<std::size_t>(r) >= attacker.script.size()) break;
      target = attacker.script[r];
      if (chebyshev(target) > reach) {
        throw DomainError("scripted attack " + to_string(target) + " lies outside radius " +
                          std::to_string(reach));
      }
      if (state.guarded(target)) {
        GridRound skip;
        skip.before = state;
        skip.attack = target;
        skip.skipped = true;
        skip.after = state;
        t.rounds.push_back(skip);
        continue;
      }
    } else {
      do {
        target.x = static_cast<std::int64_t>(rng() % span) - reach;
        target.y = static_cast<std::int64_t>(rng() % span) - reach;
      } while (state.guarded(target));
    }
    GridRound round = checked_round(state, target, radius);
    state = round.after;
    bool ok = round.valid();
    t.rounds.push_back(std::move(round));
    if (!ok) {
      t.defender_survived = false;
      break;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Rendering

struct RenderOptions {
  std::optional<Coord> attacked;
  /// When set, each guard is drawn as an arrow in its direction of travel.
  std::optional<MoveField> moves;
};

namespace detail {

inline char arrow(Coord d) {
  if (d == Coord{1, 0}) return '>';
  if (d == Coord{-1, 0}) return '<';
  if (d == Coord{0, 1}) return '^';
  if (d == Coord{0, -1}) return 'v';
  // Diagonals use numeric-keypad positions.
  if (d == Coord{1, 1}) return '9';
  if (d == Coord{-1, 1}) return '7';
  if (d == Coord{1, -1}) return '3';
  if (d == Coord{-1, -1}) return '1';
  return 'G';
}

}  // namespace detail

/// Character grid of the window |x|, |y| <= radius, top row y = radius.
/// '.' empty, 'G' guard, '@' attacked vertex, arrows for moving guards.
inline std::string render_window(const PatrolState& s, std::int64_t radius,
                                 const RenderOptions& opts = {}) {
  std::string out;
  for (std::int64_t y = radius; y >= -radius; --y) {
    for (std::int64_t x = -radius; x <= radius; ++x) {
      Coord v{x, y};
      char ch = '.';
      if (s.guarded(v)) ch = opts.moves ? detail::arrow(opts.moves->shift_for(v)) : 'G';
      if (opts.attacked && *opts.attacked == v) ch = '@';
      out += ch;
    }
    out += '\n';
  }
  return out;
}

/// Standalone SVG drawing of the same window: grid edges, guards as filled
/// discs, the attacked vertex ringed, and move arrows.
inline std::string render_svg(const PatrolState& s, std::int64_t radius,
                              const RenderOptions& opts = {}) {
  const std::int64_t cell = 24;
  const std::int64_t size = (2 * radius + 2) * cell;
  auto px = [&](Coord c) {
    return std::make_pair((c.x + radius + 1) * cell, (radius - c.y + 1) * cell);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
        "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#c0392b\"/></marker></defs>\n";
  os << "<g stroke=\"#bbb\" stroke-width=\"1\">\n";
  for (std::int64_t y = -radius; y <= radius; ++y) {
    for (std::int64_t x = -radius; x <= radius; ++x) {
      Coord v{x, y};
      for (Coord u : grid_neighbors(s.model, v)) {
        if (chebyshev(u) > radius || !(v < u)) continue;
        auto [x1, y1] = px(v);
        auto [x2, y2] = px(u);
        os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
           << "\"/>\n";
      }
    }
  }
  os << "</g>\n";
  for (std::int64_t y = -radius; y <= radius; ++y) {
    for (std::int64_t x = -radius; x <= radius; ++x) {
      Coord v{x, y};
      auto [cx, cy] = px(v);
      if (s.guarded(v)) {
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"7\" fill=\"#2c3e50\"/>\n";
        if (opts.moves) {
          auto [tx, ty] = px(v + opts.moves->shift_for(v));
          os << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << (cx + tx) / 2
             << "\" y2=\"" << (cy + ty) / 2
             << "\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
        }
      } else {
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\"#999\"/>\n";
      }
      if (opts.attacked && *opts.attacked == v) {
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy
           << "\" r=\"10\" fill=\"none\" stroke=\"#e67e22\" stroke-width=\"2\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace eternal::grid
