#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclegame/game_form.hpp"

namespace cyclegame {

// A pure stationary strategy: one chosen successor per position the player
// controls, positions in declaration order.
struct Strategy {
  int player = 0;
  std::vector<std::pair<int, int>> moves;  // (position, chosen successor)

  // Chosen successor at v, -1 if v is not controlled by this player.
  int move_at(int v) const;
  bool operator==(const Strategy&) const = default;
};

// One strategy per player, player i at index i-1.
using Situation = std::vector<Strategy>;

// The walk induced by a situation from a start vertex. It ends at the first
// terminal or at the first repeated vertex; in the cycle case the repeated
// vertex appears both at cycle_start and as the final path entry, so the
// path has at most |V| + 1 entries.
struct Play {
  std::vector<int> path;
  Outcome outcome;
  std::optional<int> cycle_start;
};

// Number of strategies of a player: the product of out-degrees over the
// positions they control (1 when they control none). Saturates at LLONG_MAX.
long long strategy_count(const GameForm& game, int player);

// All strategies of a player in mixed-radix order: the first declared
// position varies fastest, successor choices follow edge declaration order.
std::vector<Strategy> enumerate_strategies(const GameForm& game, int player);

// Per-vertex chosen successor under a situation (-1 at terminals). The
// situation must cover every position.
std::vector<int> situation_next(const GameForm& game, const Situation& situation);

Play resolve_play(const GameForm& game, const Situation& situation, int from);
Play resolve_play(const GameForm& game, std::span<const int> next, int from);

// Play outcome from every start vertex in one pass over the functional
// graph; entry v of the result is the outcome of the walk starting at v.
std::vector<Outcome> outcomes_from_all(const GameForm& game, std::span<const int> next);

}  // namespace cyclegame
