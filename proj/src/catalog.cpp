#include "cyclegame/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace cyclegame {

namespace {

Outcome a(int j) { return Outcome::terminal(j); }
const Outcome c = Outcome::cycle();

PartialPreference chain_pairs(int player,
                              std::initializer_list<std::pair<Outcome, Outcome>> pairs) {
  PartialPreference p;
  p.player = player;
  p.relations.assign(pairs);
  return p;
}

PreferenceOrder total(int player, std::initializer_list<Outcome> ranking) {
  PreferenceOrder o;
  o.player = player;
  o.ranking.assign(ranking);
  return o;
}

}  // namespace

MainExample main_example() {
  GameForm game(4);
  game.add_position("u1", 1);
  game.add_position("v1", 1);
  game.add_position("u2", 2);
  game.add_position("v2", 2);
  game.add_position("w2", 2);
  game.add_position("u3", 3);
  game.add_position("v3", 3);
  game.add_position("u4", 4);
  for (const char* t : {"a1", "a2", "a3", "a4", "a5"}) game.add_terminal(t);
  game.add_edge("u1", "u2");
  game.add_edge("u1", "u3");
  game.add_edge("u2", "v1");
  game.add_edge("u2", "v3");
  game.add_edge("v1", "v2");
  game.add_edge("v1", "u4");
  game.add_edge("v1", "w2");
  game.add_edge("u3", "v3");
  game.add_edge("u3", "a1");
  game.add_edge("v3", "v2");
  game.add_edge("v3", "a2");
  game.add_edge("v2", "u4");
  game.add_edge("v2", "a3");
  game.add_edge("u4", "w2");
  game.add_edge("u4", "a4");
  game.add_edge("w2", "u3");
  game.add_edge("w2", "a5");
  game.set_initial("u1");

  MainExample out{std::move(game), {}};
  // Player 1: the chain a2 > a4 > a3 > a1 > a5 with c unconstrained.
  out.orders.push_back(chain_pairs(1, {{a(2), a(4)}, {a(4), a(3)}, {a(3), a(1)}, {a(1), a(5)}}));
  // Player 2: both a1 and c above a3, a3 above both a4 and a5, both above a2.
  out.orders.push_back(chain_pairs(
      2, {{a(1), a(3)}, {c, a(3)}, {a(3), a(4)}, {a(3), a(5)}, {a(4), a(2)}, {a(5), a(2)}}));
  // Player 3: both a5 and c above a1, then a2, then both a3 and a4.
  out.orders.push_back(
      chain_pairs(3, {{a(5), a(1)}, {c, a(1)}, {a(1), a(2)}, {a(2), a(3)}, {a(2), a(4)}}));
  // Player 4: a1, a2, a3, a5 in any order above a4, and a4 above c.
  out.orders.push_back(chain_pairs(
      4, {{a(1), a(4)}, {a(2), a(4)}, {a(3), a(4)}, {a(5), a(4)}, {a(4), c}}));
  return out;
}

GameForm build_gk(int k, std::span<const int> controllers) {
  if (k < 2) throw std::invalid_argument("cycle length must be at least 2");
  if (static_cast<int>(controllers.size()) != k) {
    throw std::invalid_argument("one controller per cycle position required");
  }
  int num_players = 1;
  for (int p : controllers) num_players = std::max(num_players, p);
  GameForm game(num_players);
  for (int j = 1; j <= k; ++j) {
    game.add_position("v" + std::to_string(j), controllers[j - 1]);
  }
  for (int j = 1; j <= k; ++j) game.add_terminal("a" + std::to_string(j));
  for (int j = 1; j <= k; ++j) {
    // Staying on the cycle is the first declared choice, quitting the second.
    game.add_edge("v" + std::to_string(j), "v" + std::to_string(j % k + 1));
    game.add_edge("v" + std::to_string(j), "a" + std::to_string(j));
  }
  return game;
}

CatalogEntry g2_example() {
  const int controllers[] = {1, 2};
  CatalogEntry entry{"g2", build_gk(2, controllers).with_initial("v1"), {}};
  entry.prefs.push_back(total(1, {c, a(1), a(2)}));
  entry.prefs.push_back(total(2, {a(1), a(2), c}));
  return entry;
}

CatalogEntry g3_example() {
  const int controllers[] = {1, 2, 3};
  CatalogEntry entry{"g3", build_gk(3, controllers).with_initial("v1"), {}};
  entry.prefs.push_back(total(1, {a(2), a(1), a(3), c}));
  entry.prefs.push_back(total(2, {a(3), a(2), a(1), c}));
  entry.prefs.push_back(total(3, {a(1), a(3), a(2), c}));
  return entry;
}

CatalogEntry g6_example() {
  const int controllers[] = {1, 2, 1, 2, 1, 2};
  CatalogEntry entry{"g6", build_gk(6, controllers).with_initial("v1"), {}};
  entry.prefs.push_back(total(1, {a(6), a(5), a(2), a(1), a(3), a(4), c}));
  // Player 2: the union of the chains a3 > a2 > a6 > a4 > a5 > c and
  // a6 > a1 > c, taken as one partial order.
  entry.prefs.push_back(chain_pairs(2, {{a(3), a(2)},
                                        {a(2), a(6)},
                                        {a(6), a(4)},
                                        {a(4), a(5)},
                                        {a(5), c},
                                        {a(6), a(1)},
                                        {a(1), c}}));
  return entry;
}

CatalogEntry main_entry() {
  MainExample main = main_example();
  CatalogEntry entry{"main", std::move(main.game), {}};
  for (PartialPreference& order : main.orders) entry.prefs.emplace_back(std::move(order));
  return entry;
}

std::vector<std::string> catalog_names() { return {"main", "g2", "g3", "g6"}; }

CatalogEntry catalog_entry(std::string_view name) {
  if (name == "main") return main_entry();
  if (name == "g2") return g2_example();
  if (name == "g3") return g3_example();
  if (name == "g6") return g6_example();
  throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<std::string> emit_entry(const CatalogEntry& entry, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::string game_path = dir + "/" + entry.name + ".game";
  std::string pref_path = dir + "/" + entry.name + ".pref";
  std::ofstream game_out(game_path);
  game_out << to_text(entry.game);
  std::ofstream pref_out(pref_path);
  pref_out << prefs_to_text(entry.prefs, entry.game);
  if (!game_out || !pref_out) {
    throw std::runtime_error("cannot write catalog files under '" + dir + "'");
  }
  return {game_path, pref_path};
}

}  // namespace cyclegame
