#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <climits>
#include <set>

#include "cyclegame/catalog.hpp"
#include "cyclegame/errors.hpp"
#include "cyclegame/normal_form.hpp"
#include "cyclegame/parser.hpp"
#include "cyclegame/strategy.hpp"
#include "oracles.hpp"

using namespace cyclegame;

namespace {

// Renders a strategy as "u1->u2 v1->v2" for compact comparison.
std::string moves_of(const GameForm& game, const Strategy& s) {
  std::string out;
  for (auto [pos, succ] : s.moves) {
    if (!out.empty()) out += ' ';
    out += game.name(pos) + "->" + game.name(succ);
  }
  return out;
}

std::vector<std::string> names_of(const GameForm& game, const std::vector<int>& path) {
  std::vector<std::string> out;
  for (int v : path) out.push_back(game.name(v));
  return out;
}

}  // namespace

TEST_CASE("strategy enumeration is mixed-radix with the first position fastest") {
  GameForm game = main_example().game;

  CHECK(strategy_count(game, 1) == 6);
  CHECK(strategy_count(game, 2) == 8);
  CHECK(strategy_count(game, 3) == 4);
  CHECK(strategy_count(game, 4) == 2);

  const std::vector<std::vector<std::string>> expected = {
      {"u1->u2 v1->v2", "u1->u3 v1->v2", "u1->u2 v1->u4", "u1->u3 v1->u4",
       "u1->u2 v1->w2", "u1->u3 v1->w2"},
      {"u2->v1 v2->u4 w2->u3", "u2->v3 v2->u4 w2->u3", "u2->v1 v2->a3 w2->u3",
       "u2->v3 v2->a3 w2->u3", "u2->v1 v2->u4 w2->a5", "u2->v3 v2->u4 w2->a5",
       "u2->v1 v2->a3 w2->a5", "u2->v3 v2->a3 w2->a5"},
      {"u3->v3 v3->v2", "u3->a1 v3->v2", "u3->v3 v3->a2", "u3->a1 v3->a2"},
      {"u4->w2", "u4->a4"}};

  for (int player = 1; player <= 4; ++player) {
    auto all = enumerate_strategies(game, player);
    REQUIRE(static_cast<long long>(all.size()) == strategy_count(game, player));
    for (size_t k = 0; k < all.size(); ++k) {
      CAPTURE(player);
      CAPTURE(k);
      CHECK(all[k].player == player);
      CHECK(moves_of(game, all[k]) == expected[player - 1][k]);
    }
  }
}

TEST_CASE("strategy enumeration matches the recursive oracle on random games") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    oracle::RandomGameSpec spec;
    spec.num_players = oracle::pick(rng, 1, 4);
    spec.acyclic = trial % 2 == 0;
    GameForm game = oracle::random_game(rng, spec);
    CAPTURE(trial);
    for (int player = 1; player <= game.num_players(); ++player) {
      auto ours = enumerate_strategies(game, player);
      auto reference = oracle::all_move_maps(game, oracle::positions_of(game, player));
      REQUIRE(ours.size() == reference.size());
      // Same set of strategies; order may differ between the two generators.
      std::set<std::vector<std::pair<int, int>>> seen;
      for (const Strategy& s : ours) seen.insert(s.moves);
      for (const oracle::MoveMap& m : reference) {
        std::vector<std::pair<int, int>> flat(m.begin(), m.end());
        CHECK(seen.count(flat) == 1);
      }
    }
  }
}

TEST_CASE("strategy_count saturates and rejects sinks") {
  GameForm wide(1);
  for (int i = 0; i < 64; ++i) wide.add_position("p" + std::to_string(i), 1);
  wide.add_terminal("t1");
  wide.add_terminal("t2");
  for (int i = 0; i < 64; ++i) {
    wide.add_edge("p" + std::to_string(i), "t1");
    wide.add_edge("p" + std::to_string(i), "t2");
  }
  wide.set_initial("p0");
  CHECK(strategy_count(wide, 1) == LLONG_MAX);

  GameForm sink(1);
  sink.add_position("p", 1);
  sink.add_terminal("t");
  sink.set_initial("p");
  CHECK_THROWS_AS(strategy_count(sink, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_strategies(sink, 1), std::invalid_argument);

  CHECK_THROWS_AS(strategy_count(main_example().game, 5), std::invalid_argument);

  // A player in range who controls nothing has exactly the empty strategy.
  GameForm idle(2);
  idle.add_position("p", 1);
  idle.add_terminal("t");
  idle.add_edge("p", "t");
  idle.set_initial("p");
  CHECK(strategy_count(idle, 2) == 1);
  auto only = enumerate_strategies(idle, 2);
  REQUIRE(only.size() == 1);
  CHECK(only[0].moves.empty());
}

TEST_CASE("play resolution walks the induced path") {
  GameForm game = main_example().game;
  auto s1 = enumerate_strategies(game, 1);
  auto s2 = enumerate_strategies(game, 2);
  auto s3 = enumerate_strategies(game, 3);
  auto s4 = enumerate_strategies(game, 4);

  SUBCASE("first situation loops through the unique dicycle") {
    Situation sit = {s1[0], s2[0], s3[0], s4[0]};
    Play play = resolve_play(game, sit, game.initial());
    CHECK(names_of(game, play.path) ==
          std::vector<std::string>{"u1", "u2", "v1", "v2", "u4", "w2", "u3", "v3", "v2"});
    CHECK(play.outcome == Outcome::cycle());
    REQUIRE(play.cycle_start.has_value());
    CHECK(*play.cycle_start == 3);
    CHECK(play.path.front() == game.initial());
    CHECK(play.path[*play.cycle_start] == play.path.back());
  }
  SUBCASE("terminal play ends at the terminal") {
    Situation sit = {s1[1], s2[0], s3[1], s4[0]};
    Play play = resolve_play(game, sit, game.initial());
    CHECK(names_of(game, play.path) == std::vector<std::string>{"u1", "u3", "a1"});
    CHECK(play.outcome == Outcome::terminal(1));
    CHECK_FALSE(play.cycle_start.has_value());
  }
  SUBCASE("start choice changes the walk, not the rules") {
    Situation sit = {s1[0], s2[0], s3[0], s4[0]};
    Play play = resolve_play(game, sit, game.find_vertex("u3"));
    CHECK(names_of(game, play.path) ==
          std::vector<std::string>{"u3", "v3", "v2", "u4", "w2", "u3"});
    CHECK(*play.cycle_start == 0);
    Play at_terminal = resolve_play(game, sit, game.find_vertex("a4"));
    CHECK(at_terminal.path == std::vector<int>{game.find_vertex("a4")});
    CHECK(at_terminal.outcome == Outcome::terminal(4));
  }
  SUBCASE("positions off the walk do not affect the play") {
    // u1 -> u3 -> a1 never visits a position of players 2 or 4, so their
    // strategies are irrelevant to the play.
    Play reference = resolve_play(game, {s1[1], s2[0], s3[1], s4[0]}, game.initial());
    for (const Strategy& b : s2) {
      for (const Strategy& d : s4) {
        Play play = resolve_play(game, {s1[1], b, s3[1], d}, game.initial());
        CHECK(play.path == reference.path);
        CHECK(play.outcome == reference.outcome);
      }
    }
  }
}

TEST_CASE("plays stay within the structural bounds") {
  GameForm game = main_example().game;
  NormalForm nf = build_normal_form(game);
  std::vector<std::string> cycle_names = {"u3", "v3", "v2", "u4", "w2"};
  std::set<std::string> cycle_set(cycle_names.begin(), cycle_names.end());

  long long cyclic_cells = 0;
  for (long long flat = 0; flat < nf.size(); ++flat) {
    Situation sit = nf.situation_at(nf.tuple_at(flat));
    Play play = resolve_play(game, sit, game.initial());
    CHECK(play.outcome == nf.cells[flat]);
    CHECK(play.path.size() <= static_cast<size_t>(game.num_vertices()) + 1);
    for (size_t i = 0; i + 1 < play.path.size(); ++i) {
      auto succ = game.successors(play.path[i]);
      CHECK(std::find(succ.begin(), succ.end(), play.path[i + 1]) != succ.end());
    }
    if (play.outcome.is_cycle()) {
      ++cyclic_cells;
      REQUIRE(play.cycle_start.has_value());
      // Every cyclic play must wind up on the one dicycle of the graph,
      // entered at some rotation.
      std::set<std::string> seen;
      for (size_t i = *play.cycle_start; i + 1 < play.path.size(); ++i) {
        seen.insert(game.name(play.path[i]));
      }
      CHECK(seen == cycle_set);
    }
  }
  CHECK(cyclic_cells > 0);
}

TEST_CASE("normal form layout") {
  GameForm game = main_example().game;
  NormalForm nf = build_normal_form(game);

  CHECK(nf.dims == std::vector<int>{6, 8, 4, 2});
  CHECK(nf.strides == std::vector<long long>{1, 6, 48, 192});
  CHECK(nf.size() == 384);
  CHECK(nf.num_outcomes == 6);

  long long product = 1;
  for (int player = 1; player <= game.num_players(); ++player) {
    product *= strategy_count(game, player);
  }
  CHECK(nf.size() == product);

  for (long long flat = 0; flat < nf.size(); ++flat) {
    auto tuple = nf.tuple_at(flat);
    CHECK(nf.flat_index(tuple) == flat);
  }
  // Player 1 varies fastest in the flat order.
  auto t0 = nf.tuple_at(0);
  auto t1 = nf.tuple_at(1);
  CHECK(t0 == std::vector<int>{0, 0, 0, 0});
  CHECK(t1 == std::vector<int>{1, 0, 0, 0});
  CHECK(nf.tuple_at(6) == std::vector<int>{0, 1, 0, 0});

  std::vector<int> corner = {2, 4, 1, 1};
  Situation sit = nf.situation_at(corner);
  CHECK(moves_of(game, sit[0]) == "u1->u2 v1->u4");
  CHECK(moves_of(game, sit[1]) == "u2->v1 v2->u4 w2->a5");
  CHECK(moves_of(game, sit[2]) == "u3->a1 v3->v2");
  CHECK(moves_of(game, sit[3]) == "u4->a4");
}

TEST_CASE("normal form size guard") {
  GameForm game = main_example().game;
  CHECK_THROWS_AS(build_normal_form(game, 100), SizeLimitError);
  try {
    build_normal_form(game, 100);
  } catch (const SizeLimitError& e) {
    CHECK(std::string(e.what()) == "normal form too large: 384 exceeds limit 100");
  }
  CHECK(build_normal_form(game, 384).size() == 384);

  GameForm no_init(2);
  no_init.add_position("p", 1);
  no_init.add_terminal("t");
  no_init.add_edge("p", "t");
  CHECK_THROWS_AS(build_normal_form(no_init), std::invalid_argument);
}

TEST_CASE("outcomes_from_all agrees with walking every start") {
  GameForm game = main_example().game;
  NormalForm nf = build_normal_form(game);
  for (long long flat = 0; flat < nf.size(); flat += 7) {
    Situation sit = nf.situation_at(nf.tuple_at(flat));
    auto next = situation_next(game, sit);
    auto all = outcomes_from_all(game, next);
    REQUIRE(static_cast<int>(all.size()) == game.num_vertices());
    for (int v = 0; v < game.num_vertices(); ++v) {
      CHECK(all[v] == resolve_play(game, next, v).outcome);
    }
  }
}

TEST_CASE("play resolution matches the naive oracle on random games") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    oracle::RandomGameSpec spec;
    spec.num_players = oracle::pick(rng, 1, 4);
    spec.max_positions = 7;
    spec.acyclic = false;
    GameForm game = oracle::random_game(rng, spec);
    CAPTURE(trial);

    std::vector<std::vector<Strategy>> axes;
    for (int player = 1; player <= game.num_players(); ++player) {
      axes.push_back(enumerate_strategies(game, player));
    }
    // A handful of random situations per game.
    for (int rep = 0; rep < 12; ++rep) {
      Situation sit;
      for (auto& axis : axes) {
        sit.push_back(axis[oracle::pick(rng, 0, static_cast<int>(axis.size()) - 1)]);
      }
      auto next = situation_next(game, sit);
      auto all = outcomes_from_all(game, next);
      oracle::MoveMap merged;
      for (int pos : game.positions()) merged[pos] = next[pos];
      for (int v = 0; v < game.num_vertices(); ++v) {
        CHECK(all[v] == oracle::play_outcome(game, merged, v));
        CHECK(resolve_play(game, next, v).outcome == oracle::play_outcome(game, merged, v));
      }
    }
  }
}

TEST_CASE("situation_next validates coverage") {
  GameForm game = main_example().game;
  auto s1 = enumerate_strategies(game, 1);
  auto s2 = enumerate_strategies(game, 2);
  auto s3 = enumerate_strategies(game, 3);
  auto s4 = enumerate_strategies(game, 4);
  Situation missing = {s1[0], s2[0], s3[0]};
  CHECK_THROWS_AS(situation_next(game, missing), std::invalid_argument);

  Situation sit = {s1[0], s2[0], s3[0], s4[0]};
  auto next = situation_next(game, sit);
  CHECK(next[game.find_vertex("u1")] == game.find_vertex("u2"));
  CHECK(next[game.find_vertex("a1")] == -1);
}

TEST_CASE("table views render the frozen corner of the grid") {
  GameForm game = main_example().game;
  NormalForm nf = build_normal_form(game);

  std::string csv = normal_form_csv(game, nf);
  // Header plus one row per situation.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 385);
  CHECK(csv.rfind("s1,s2,s3,s4,outcome,improvers\n", 0) == 0);
  CHECK(csv.find("1,1,1,1,c,\n") != std::string::npos);
  CHECK(csv.find("2,1,1,1,c,\n") != std::string::npos);

  std::string md = normal_form_markdown(game, nf);
  CHECK(md.find("s1_1: u1->u2 v1->v2") != std::string::npos);
  CHECK(md.find("s4_1 s2_1") != std::string::npos);
}
