#include "cyclegame/solvers.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "cyclegame/errors.hpp"

namespace cyclegame {

namespace {

// Kahn topological order (sources first); on failure throws with a witness
// cycle found by walking residual successors until a vertex repeats.
std::vector<int> topological_order(const GameForm& game) {
  int n = game.num_vertices();
  std::vector<int> indegree(n, 0);
  for (const auto& [u, v] : game.edges()) ++indegree[v];
  std::deque<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> removed(n, 0);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    removed[v] = 1;
    order.push_back(v);
    for (int s : game.successors(v)) {
      if (--indegree[s] == 0) ready.push_back(s);
    }
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Every residual vertex keeps a residual successor, so a walk through the
  // residual graph must close on itself.
  int start = 0;
  while (removed[start]) ++start;
  std::vector<int> seen_at(n, -1);
  std::vector<int> walk;
  int cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    int next = -1;
    for (int s : game.successors(cur)) {
      if (!removed[s]) {
        next = s;
        break;
      }
    }
    cur = next;
  }
  std::vector<std::string> cycle;
  for (size_t i = seen_at[cur]; i < walk.size(); ++i) cycle.push_back(game.name(walk[i]));
  cycle.push_back(game.name(cur));
  std::ostringstream message;
  message << "game has a dicycle: ";
  for (size_t i = 0; i < cycle.size(); ++i) message << (i ? " -> " : "") << cycle[i];
  throw CyclicGameError(message.str(), std::move(cycle));
}

}  // namespace

BackwardInductionResult backward_induction(const GameForm& game,
                                           const PreferenceProfile& profile) {
  std::vector<PreferenceTable> tables = compile_profile(profile, game.num_outcomes());
  if (static_cast<int>(tables.size()) != game.num_players()) {
    throw std::invalid_argument("one total order per player required");
  }
  std::vector<int> order = topological_order(game);

  BackwardInductionResult result;
  result.value.assign(game.num_vertices(), Outcome::cycle());
  std::vector<int> chosen(game.num_vertices(), -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (game.is_terminal(v)) {
      result.value[v] = game.outcome_at(v);
      continue;
    }
    const PreferenceTable& table = tables[game.controller(v) - 1];
    int best = -1;
    for (int s : game.successors(v)) {
      if (best < 0 ||
          table.better_than(outcome_code(result.value[s], table.num_outcomes),
                            outcome_code(result.value[best], table.num_outcomes))) {
        best = s;
      }
    }
    chosen[v] = best;
    result.value[v] = result.value[best];
  }
  for (int player = 1; player <= game.num_players(); ++player) {
    Strategy s{player, {}};
    for (int v : game.positions_of(player)) s.moves.emplace_back(v, chosen[v]);
    result.situation.push_back(std::move(s));
  }
  return result;
}

WinAssignment parse_win_assignment(std::string_view text, const GameForm& game) {
  if (game.num_players() != 2) throw std::invalid_argument("not a two-person game");
  WinAssignment win;
  win.num_outcomes = game.num_outcomes();
  win.winner_by_code.assign(win.num_outcomes, 0);
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(start, end - start));
    ++line_no;
    if (size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::string keyword, token, player;
    if (words >> keyword) {
      if (keyword != "win" || !(words >> token >> player) || (words >> keyword)) {
        throw ParseError(line_no, "malformed 'win' line");
      }
      auto outcome = game.outcome_by_name(token);
      if (!outcome) throw ParseError(line_no, "unknown outcome '" + token + "'");
      if (player != "1" && player != "2") {
        throw ParseError(line_no, "winner must be 1 or 2");
      }
      int code = outcome_code(*outcome, win.num_outcomes);
      if (win.winner_by_code[code] != 0) {
        throw ParseError(line_no, "duplicate win assignment for '" + token + "'");
      }
      win.winner_by_code[code] = player == "1" ? 1 : 2;
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  for (int code = 0; code < win.num_outcomes; ++code) {
    if (win.winner_by_code[code] == 0) {
      throw ParseError(0, "incomplete win assignment: no winner for '" +
                              game.outcome_name(outcome_from_code(code, win.num_outcomes)) +
                              "'");
    }
  }
  return win;
}

AttractorSolution zero_sum_attractor(const GameForm& game, const WinAssignment& win) {
  if (game.num_players() != 2) throw std::invalid_argument("not a two-person game");
  if (win.num_outcomes != game.num_outcomes() ||
      static_cast<int>(win.winner_by_code.size()) != win.num_outcomes) {
    throw std::invalid_argument("incomplete win assignment");
  }
  for (int w : win.winner_by_code) {
    if (w != 1 && w != 2) throw std::invalid_argument("incomplete win assignment");
  }

  // The player losing the cycle outcome must attack their winning terminals;
  // the other player defends by staying outside the attacked region.
  int attacker = win.winner(Outcome::cycle()) == 1 ? 2 : 1;
  int defender = 3 - attacker;
  int n = game.num_vertices();

  AttractorSolution solution;
  solution.operations = 0;
  std::vector<std::vector<int>> preds(n);
  for (const auto& [u, v] : game.edges()) {
    preds[v].push_back(u);
    ++solution.operations;
  }
  std::vector<char> in_set(n, 0);
  std::vector<int> layer(n, -1);
  std::vector<int> escape(n, -1);  // attacker's progress move inside the set
  std::vector<int> remaining(n, 0);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    ++solution.operations;
    if (game.is_terminal(v)) {
      if (win.winner(game.outcome_at(v)) == attacker) {
        in_set[v] = 1;
        layer[v] = 0;
        queue.push_back(v);
      }
    } else if (game.controller(v) == defender) {
      remaining[v] = static_cast<int>(game.successors(v).size());
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    ++solution.operations;
    for (int v : preds[u]) {
      ++solution.operations;
      if (in_set[v] || game.is_terminal(v)) continue;
      if (game.controller(v) == attacker) {
        in_set[v] = 1;
        layer[v] = layer[u] + 1;
        escape[v] = u;
        queue.push_back(v);
      } else if (--remaining[v] == 0) {
        // A defender position joins only once every successor is inside, so
        // all its successors sit on strictly smaller layers.
        in_set[v] = 1;
        layer[v] = layer[u] + 1;
        queue.push_back(v);
      }
    }
  }

  solution.winner_from.assign(n, defender);
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) solution.winner_from[v] = attacker;
    (solution.winner_from[v] == 1 ? solution.v1_set : solution.v2_set).push_back(v);
  }

  Strategy attack{attacker, {}};
  for (int v : game.positions_of(attacker)) {
    ++solution.operations;
    attack.moves.emplace_back(v, in_set[v] ? escape[v] : game.successors(v).front());
  }
  Strategy defend{defender, {}};
  for (int v : game.positions_of(defender)) {
    int move = game.successors(v).front();
    if (!in_set[v]) {
      // Some successor stays outside, else the position would have joined.
      for (int s : game.successors(v)) {
        ++solution.operations;
        if (!in_set[s]) {
          move = s;
          break;
        }
      }
    }
    defend.moves.emplace_back(v, move);
  }
  solution.strategy1 = attacker == 1 ? std::move(attack) : std::move(defend);
  solution.strategy2 = attacker == 1 ? std::move(defend) : std::move(attack);
  return solution;
}

}  // namespace cyclegame
