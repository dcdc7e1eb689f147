#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cyclegame/catalog.hpp"
#include "cyclegame/errors.hpp"
#include "cyclegame/parser.hpp"
#include "oracles.hpp"

using namespace cyclegame;

namespace {

Outcome a(int j) { return Outcome::terminal(j); }
const Outcome cyc = Outcome::cycle();

std::vector<std::vector<int>> extension_codes(const std::vector<PreferenceOrder>& orders,
                                              int num_outcomes) {
  std::vector<std::vector<int>> out;
  for (const PreferenceOrder& order : orders) {
    std::vector<int> codes;
    for (Outcome o : order.ranking) codes.push_back(outcome_code(o, num_outcomes));
    out.push_back(std::move(codes));
  }
  return out;
}

}  // namespace

TEST_CASE("headline game structure") {
  MainExample main = main_example();
  CHECK(main.game.num_vertices() == 13);
  CHECK(main.game.num_terminals() == 5);
  CHECK(main.game.edges().size() == 17);
  CHECK(main.game.num_players() == 4);
  CHECK(main.game.name(main.game.initial()) == "u1");
  CHECK(validate(main.game).empty());
}

TEST_CASE("validate reports structural violations") {
  MainExample main = main_example();

  SUBCASE("edge out of a terminal") {
    main.game.add_edge("a1", "u1");
    auto report = validate(main.game);
    REQUIRE(report.size() == 1);
    CHECK(report[0] == "terminal has out-edge: a1 -> u1");
  }
  SUBCASE("terminal as initial vertex") {
    GameForm game = main.game.with_initial("a3");
    auto report = validate(game);
    REQUIRE(report.size() == 1);
    CHECK(report[0] == "initial position is a terminal: a3");
  }
  SUBCASE("position without out-edges") {
    main.game.add_position("stuck", 1);
    auto report = validate(main.game);
    REQUIRE(report.size() == 1);
    CHECK(report[0] == "position has no out-edge: stuck");
  }
  SUBCASE("duplicate edge") {
    main.game.add_edge("u1", "u2");
    auto report = validate(main.game);
    REQUIRE(report.size() == 1);
    CHECK(report[0] == "duplicate edge: u1 -> u2");
  }
  SUBCASE("controller out of range") {
    main.game.add_position("rogue", 9);
    main.game.add_edge("rogue", "a1");
    auto report = validate(main.game);
    REQUIRE(report.size() == 1);
    CHECK(report[0] == "controller index out of range: rogue (player 9 of 4)");
  }
  SUBCASE("missing initial vertex") {
    const int controllers[] = {1, 2};
    GameForm game = build_gk(2, controllers);
    auto report = validate(game);
    REQUIRE(report.size() == 1);
    CHECK(report[0] == "no initial position");
  }
}

TEST_CASE("serialization round trip is identity") {
  for (const std::string& name : catalog_names()) {
    CatalogEntry entry = catalog_entry(name);
    CAPTURE(name);
    GameForm reparsed = parse_game(to_text(entry.game));
    CHECK(reparsed == entry.game);
    CHECK(to_text(reparsed) == to_text(entry.game));
  }
}

TEST_CASE("game parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_game(""), "missing players declaration", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("# only a comment\n"), "missing players declaration",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_game("position x player 1\n"),
                       "line 1: missing players declaration", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("players 0\n"), "line 1: invalid player count", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("players two\n"),
                       "line 1: invalid player count 'two'", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("players 2\nplayers 2\n"),
                       "line 2: duplicate players declaration", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_game("players 2\nposition u1 player 1\nterminal t\nedge u1 x9\ninit u1\n"),
      "line 4: unknown vertex 'x9'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_game("players 2\nposition u1 player 1\nposition u1 player 2\n"),
      "line 3: duplicate declaration of 'u1'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_game("players 2\nposition u1 player 1\nterminal u1\n"),
      "line 3: duplicate declaration of 'u1'", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("players 2\nposition u1 player 1\nterminal t\nedge u1 t\n"),
                       "missing init declaration", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_game("players 2\nposition u1 player 1\ninit u1\ninit u1\n"),
      "line 4: duplicate init declaration", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("players 2\nterminal c\n"),
                       "line 2: invalid vertex name 'c'", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("players 2\nposition a>b player 1\n"),
                       "line 2: invalid vertex name 'a>b'", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("players 2\nposition u1\n"),
                       "line 2: malformed 'position' line", ParseError);
  CHECK_THROWS_WITH_AS(parse_game("players 2\nconnect u1 u1\n"),
                       "line 2: unknown directive 'connect'", ParseError);
  // Line numbers count raw lines, comments and blanks included.
  CHECK_THROWS_WITH_AS(parse_game("players 2\n\n# note\nedge u1 u1\n"),
                       "line 4: unknown vertex 'u1'", ParseError);
}

TEST_CASE("comments and duplicate edges in parsed text") {
  GameForm game = parse_game(
      "# two-position loop\n"
      "players 2\n"
      "position u1 player 1  # controlled by player 1\n"
      "position u2 player 2\n"
      "terminal t1\n"
      "edge u1 u2\n"
      "edge u2 u1\n"
      "edge u1 t1\n"
      "edge u1 t1\n"
      "init u1\n");
  CHECK(game.num_vertices() == 3);
  auto report = validate(game);
  REQUIRE(report.size() == 1);
  CHECK(report[0] == "duplicate edge: u1 -> t1");
}

TEST_CASE("preference parsing") {
  MainExample main = main_example();
  const GameForm& game = main.game;

  SUBCASE("total line") {
    auto prefs = parse_preferences(
        "pref 1 total a2 > a4 > a3 > a1 > a5 > c\n"
        "pref 2 total c > a1 > a2 > a3 > a4 > a5\n"
        "pref 3 total a1 > a2 > a3 > a4 > a5 > c\n"
        "pref 4 total a5 > a4 > a3 > a2 > a1 > c\n",
        game);
    REQUIRE(prefs.size() == 4);
    REQUIRE(is_total(prefs[0]));
    PreferenceOrder o1 = std::get<PreferenceOrder>(prefs[0]);
    CHECK(o1.ranking == std::vector<Outcome>{a(2), a(4), a(3), a(1), a(5), cyc});
    CHECK(o1.prefers(a(2), cyc));
    CHECK_FALSE(o1.prefers(cyc, a(2)));
    CHECK_FALSE(o1.prefers(a(2), a(2)));
  }
  SUBCASE("partial line") {
    auto prefs = parse_preferences(
        "pref 1 partial a2>a4 a4>a3 a3>a1 a1>a5\n"
        "pref 2 partial a1>a3 c>a3 a3>a4 a3>a5 a4>a2 a5>a2\n"
        "pref 3 partial a5>a1 c>a1 a1>a2 a2>a3 a2>a4\n"
        "pref 4 partial a1>a4 a2>a4 a3>a4 a5>a4 a4>c\n",
        game);
    for (int i = 0; i < 4; ++i) {
      CAPTURE(i);
      REQUIRE_FALSE(is_total(prefs[i]));
      CHECK(std::get<PartialPreference>(prefs[i]) == main.orders[i]);
    }
  }
  SUBCASE("errors") {
    GameForm two = parse_game(
        "players 2\nposition u1 player 1\nterminal t1\nedge u1 t1\ninit u1\n");
    CHECK_THROWS_WITH_AS(parse_preferences("pref 1 total t1 > x\npref 2 total c > t1\n", two),
                         "line 1: unknown outcome 'x'", ParseError);
    CHECK_THROWS_WITH_AS(parse_preferences("pref 3 total t1 > c\n", two),
                         "line 1: player index out of range", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_preferences("pref 1 total t1 > c\npref 1 total c > t1\n", two),
        "line 2: duplicate preference for player 1", ParseError);
    CHECK_THROWS_WITH_AS(parse_preferences("pref 1 total t1 > c\n", two),
                         "missing preference for player 2", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_preferences("pref 1 total t1\npref 2 total c > t1\n", two),
        "line 1: total preference must rank every outcome exactly once", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_preferences("pref 1 total t1 c\npref 2 total c > t1\n", two),
        "line 1: expected '>' between outcomes", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_preferences("pref 1 partial t1>c c>t1\npref 2 total c > t1\n", two),
        "line 1: cyclic relation set", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_preferences("pref 1 partial t1>\npref 2 total c > t1\n", two),
        "line 1: malformed relation pair 't1>'", ParseError);
  }
}

TEST_CASE("preference serialization round trip") {
  for (const std::string& name : catalog_names()) {
    CatalogEntry entry = catalog_entry(name);
    CAPTURE(name);
    auto reparsed = parse_preferences(prefs_to_text(entry.prefs, entry.game), entry.game);
    CHECK(reparsed == entry.prefs);
  }
}

TEST_CASE("linear extensions match the permutation filter") {
  MainExample main = main_example();
  int m = main.game.num_outcomes();

  // Frozen counts for the four headline orders, cross-checked by filtering
  // all m! permutations.
  const long long expected[] = {6, 4, 4, 24};
  for (int i = 0; i < 4; ++i) {
    CAPTURE(i);
    std::vector<PreferenceOrder> ours = linear_extensions(main.orders[i], m);
    std::vector<std::vector<int>> reference = oracle::extensions_by_filter(main.orders[i], m);
    CHECK(static_cast<long long>(ours.size()) == expected[i]);
    CHECK(count_linear_extensions(main.orders[i], m) == expected[i]);
    // next_permutation enumerates lexicographically, so sequences must agree
    // element by element.
    CHECK(extension_codes(ours, m) == reference);
    for (const PreferenceOrder& order : ours) {
      for (const auto& [better, worse] : main.orders[i].relations) {
        CHECK(order.prefers(better, worse));
      }
    }
  }
}

TEST_CASE("linear extension edge cases") {
  SUBCASE("unconstrained relation over three outcomes") {
    PartialPreference empty{1, {}};
    auto all = linear_extensions(empty, 3);
    CHECK(all.size() == 6);
    CHECK(extension_codes(all, 3) == oracle::extensions_by_filter(empty, 3));
  }
  SUBCASE("complete chain pins a single extension") {
    PartialPreference chain{1, {{a(1), a(2)}, {a(2), a(3)}, {a(3), cyc}}};
    auto all = linear_extensions(chain, 4);
    REQUIRE(all.size() == 1);
    CHECK(all[0].ranking == std::vector<Outcome>{a(1), a(2), a(3), cyc});
  }
  SUBCASE("chain of length k over m outcomes leaves m!/k! orders") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      int m = oracle::pick(rng, 2, 6);
      int k = oracle::pick(rng, 2, m);
      std::vector<int> codes(m);
      for (int i = 0; i < m; ++i) codes[i] = i;
      std::shuffle(codes.begin(), codes.end(), rng);
      PartialPreference chain{1, {}};
      for (int i = 0; i + 1 < k; ++i) {
        chain.relations.emplace_back(outcome_from_code(codes[i], m),
                                     outcome_from_code(codes[i + 1], m));
      }
      long long expected = 1;
      for (int i = k + 1; i <= m; ++i) expected *= i;
      CAPTURE(m);
      CAPTURE(k);
      CHECK(count_linear_extensions(chain, m) == expected);
    }
  }
  SUBCASE("random partial orders agree with the filter") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      int m = oracle::pick(rng, 2, 6);
      PartialPreference partial = oracle::random_partial(rng, 1, m, 50);
      std::shuffle(partial.relations.begin(), partial.relations.end(), rng);
      CAPTURE(trial);
      CHECK(extension_codes(linear_extensions(partial, m), m) ==
            oracle::extensions_by_filter(partial, m));
    }
  }
  SUBCASE("cyclic relations are rejected") {
    PartialPreference bad{1, {{a(1), a(2)}, {a(2), a(1)}}};
    CHECK_THROWS_WITH_AS(linear_extensions(bad, 3), "cyclic relation set",
                         std::invalid_argument);
  }
}

TEST_CASE("builder rejects malformed vertex names") {
  GameForm game(2);
  CHECK_THROWS_AS(game.add_position("c", 1), std::invalid_argument);
  CHECK_THROWS_AS(game.add_position("a b", 1), std::invalid_argument);
  CHECK_THROWS_AS(game.add_position("x>y", 1), std::invalid_argument);
  CHECK_THROWS_AS(game.add_position("", 1), std::invalid_argument);
  game.add_position("ok", 1);
  CHECK_THROWS_AS(game.add_terminal("ok"), std::invalid_argument);
  CHECK_THROWS_AS(game.add_edge("ok", "missing"), std::invalid_argument);
  CHECK_THROWS_AS(game.set_initial("missing"), std::invalid_argument);
  CHECK_THROWS_AS(GameForm(0), std::invalid_argument);
}
