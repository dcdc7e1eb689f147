#include "cyclegame/strategy.hpp"

#include <climits>
#include <stdexcept>

namespace cyclegame {

int Strategy::move_at(int v) const {
  for (const auto& [position, successor] : moves) {
    if (position == v) return successor;
  }
  return -1;
}

namespace {

void check_player(const GameForm& game, int player) {
  if (player < 1 || player > game.num_players()) {
    throw std::invalid_argument("player index out of range");
  }
}

}  // namespace

long long strategy_count(const GameForm& game, int player) {
  check_player(game, player);
  unsigned __int128 total = 1;
  for (int v : game.positions_of(player)) {
    size_t degree = game.successors(v).size();
    if (degree == 0) {
      throw std::invalid_argument("position has no out-edge: " + game.name(v));
    }
    total *= degree;
    if (total > static_cast<unsigned __int128>(LLONG_MAX)) return LLONG_MAX;
  }
  return static_cast<long long>(total);
}

std::vector<Strategy> enumerate_strategies(const GameForm& game, int player) {
  check_player(game, player);
  std::vector<int> positions = game.positions_of(player);
  long long total = strategy_count(game, player);
  std::vector<Strategy> out;
  out.reserve(static_cast<size_t>(total));
  for (long long index = 0; index < total; ++index) {
    Strategy s{player, {}};
    s.moves.reserve(positions.size());
    long long rest = index;
    for (int v : positions) {
      std::span<const int> succ = game.successors(v);
      long long degree = static_cast<long long>(succ.size());
      s.moves.emplace_back(v, succ[static_cast<size_t>(rest % degree)]);
      rest /= degree;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> situation_next(const GameForm& game, const Situation& situation) {
  std::vector<int> next(game.num_vertices(), -1);
  if (static_cast<int>(situation.size()) != game.num_players()) {
    throw std::invalid_argument("situation must hold one strategy per player");
  }
  for (const Strategy& s : situation) {
    for (const auto& [position, successor] : s.moves) next[position] = successor;
  }
  for (int v : game.positions()) {
    if (next[v] < 0) {
      throw std::invalid_argument("situation leaves position uncovered: " + game.name(v));
    }
  }
  return next;
}

Play resolve_play(const GameForm& game, std::span<const int> next, int from) {
  Play play;
  std::vector<int> at(game.num_vertices(), -1);  // index of the vertex in path
  int cur = from;
  while (true) {
    if (at[cur] >= 0) {
      play.path.push_back(cur);
      play.outcome = Outcome::cycle();
      play.cycle_start = at[cur];
      return play;
    }
    at[cur] = static_cast<int>(play.path.size());
    play.path.push_back(cur);
    if (game.is_terminal(cur)) {
      play.outcome = game.outcome_at(cur);
      return play;
    }
    cur = next[cur];
  }
}

Play resolve_play(const GameForm& game, const Situation& situation, int from) {
  return resolve_play(game, situation_next(game, situation), from);
}

std::vector<Outcome> outcomes_from_all(const GameForm& game, std::span<const int> next) {
  enum : char { kUnknown = 0, kOnWalk = 1, kDone = 2 };
  int n = game.num_vertices();
  std::vector<Outcome> out(n);
  std::vector<char> state(n, kUnknown);
  std::vector<int> walk;
  for (int start = 0; start < n; ++start) {
    if (state[start] != kUnknown) continue;
    walk.clear();
    int cur = start;
    Outcome value;
    while (true) {
      if (game.is_terminal(cur)) {
        value = game.outcome_at(cur);
        out[cur] = value;
        state[cur] = kDone;
        break;
      }
      if (state[cur] == kDone) {
        value = out[cur];
        break;
      }
      if (state[cur] == kOnWalk) {
        // Closed the walk on itself: the tail feeds a dicycle.
        value = Outcome::cycle();
        break;
      }
      state[cur] = kOnWalk;
      walk.push_back(cur);
      cur = next[cur];
    }
    for (int v : walk) {
      out[v] = value;
      state[v] = kDone;
    }
  }
  return out;
}

}  // namespace cyclegame
