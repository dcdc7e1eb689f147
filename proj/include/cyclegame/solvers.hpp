#pragma once

#include <string_view>
#include <vector>

#include "cyclegame/preferences.hpp"
#include "cyclegame/strategy.hpp"

namespace cyclegame {

// Optimal play on an acyclic game: vertices are processed in reverse
// topological order, each position takes the first declared successor whose
// propagated outcome is best for its controller. Throws CyclicGameError
// ("game has a dicycle") with a witness cycle, and std::invalid_argument
// when the profile is not one total order per player.
struct BackwardInductionResult {
  Situation situation;
  std::vector<Outcome> value;  // propagated outcome per vertex
};

BackwardInductionResult backward_induction(const GameForm& game,
                                           const PreferenceProfile& profile);

// A two-person win/lose split of the outcomes: every terminal and the cycle
// outcome is won by player 1 or player 2.
struct WinAssignment {
  int num_outcomes = 0;
  std::vector<int> winner_by_code;

  int winner(Outcome o) const { return winner_by_code[outcome_code(o, num_outcomes)]; }
};

// File format: one `win <outcome> <1|2>` line per outcome including c.
WinAssignment parse_win_assignment(std::string_view text, const GameForm& game);

// Solution of a two-person win/lose game. v2_set collects the vertices from
// which player 2 forces a win, v1_set the complement; the strategies are a
// subgame perfect saddle point (each wins from exactly its winning set, no
// matter how the opponent plays). The player who wins the cycle outcome
// plays any first declared successor inside the opponent's region; the other
// player escapes toward winning terminals along decreasing breadth-first
// layers, which rules out cycling inside the region they attack.
struct AttractorSolution {
  std::vector<int> winner_from;  // per vertex, 1 or 2
  std::vector<int> v1_set;
  std::vector<int> v2_set;
  Strategy strategy1;
  Strategy strategy2;
  long long operations = 0;  // basic set operations, linear in |V| + |E|
};

// Throws std::invalid_argument for games that are not two-person or win
// assignments that do not cover every outcome.
AttractorSolution zero_sum_attractor(const GameForm& game, const WinAssignment& win);

}  // namespace cyclegame
