#include "cyclegame/parser.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "cyclegame/errors.hpp"

namespace cyclegame {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Comment-stripped, tokenized non-blank lines.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::istringstream words{std::string(raw)};
    std::string word;
    while (words >> word) line.tokens.push_back(word);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

int parse_int(const Line& line, const std::string& token, const char* what) {
  try {
    size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("invalid ") + what + " '" + token + "'");
  }
}

void expect_tokens(const Line& line, size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "malformed '" + line.tokens[0] + "' line");
  }
}

void check_vertex_name(const Line& line, const std::string& name) {
  if (!is_valid_vertex_name(name)) {
    throw ParseError(line.number, "invalid vertex name '" + name + "'");
  }
}

Outcome outcome_token(const Line& line, const GameForm& game, const std::string& token) {
  std::optional<Outcome> o = game.outcome_by_name(token);
  if (!o) throw ParseError(line.number, "unknown outcome '" + token + "'");
  return *o;
}

}  // namespace

GameForm parse_game(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing players declaration");

  const Line& head = lines.front();
  if (head.tokens[0] != "players") {
    throw ParseError(head.number, "missing players declaration");
  }
  expect_tokens(head, 2);
  int num_players = parse_int(head, head.tokens[1], "player count");
  if (num_players < 1) throw ParseError(head.number, "invalid player count");
  GameForm game(num_players);

  bool has_init = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kind = line.tokens[0];
    if (kind == "players") {
      throw ParseError(line.number, "duplicate players declaration");
    } else if (kind == "position") {
      expect_tokens(line, 4);
      if (line.tokens[2] != "player") {
        throw ParseError(line.number, "malformed 'position' line");
      }
      check_vertex_name(line, line.tokens[1]);
      if (game.find_vertex(line.tokens[1]) >= 0) {
        throw ParseError(line.number, "duplicate declaration of '" + line.tokens[1] + "'");
      }
      game.add_position(line.tokens[1], parse_int(line, line.tokens[3], "player index"));
    } else if (kind == "terminal") {
      expect_tokens(line, 2);
      check_vertex_name(line, line.tokens[1]);
      if (game.find_vertex(line.tokens[1]) >= 0) {
        throw ParseError(line.number, "duplicate declaration of '" + line.tokens[1] + "'");
      }
      game.add_terminal(line.tokens[1]);
    } else if (kind == "edge") {
      expect_tokens(line, 3);
      for (int side = 1; side <= 2; ++side) {
        if (game.find_vertex(line.tokens[side]) < 0) {
          throw ParseError(line.number, "unknown vertex '" + line.tokens[side] + "'");
        }
      }
      game.add_edge(line.tokens[1], line.tokens[2]);
    } else if (kind == "init") {
      expect_tokens(line, 2);
      if (has_init) throw ParseError(line.number, "duplicate init declaration");
      if (game.find_vertex(line.tokens[1]) < 0) {
        throw ParseError(line.number, "unknown vertex '" + line.tokens[1] + "'");
      }
      game.set_initial(line.tokens[1]);
      has_init = true;
    } else {
      throw ParseError(line.number, "unknown directive '" + kind + "'");
    }
  }
  if (!has_init) throw ParseError(0, "missing init declaration");
  return game;
}

std::vector<PlayerPreference> parse_preferences(std::string_view text, const GameForm& game) {
  std::vector<std::optional<PlayerPreference>> entries(game.num_players());
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] != "pref") {
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
    if (line.tokens.size() < 3) throw ParseError(line.number, "malformed 'pref' line");
    int player = parse_int(line, line.tokens[1], "player index");
    if (player < 1 || player > game.num_players()) {
      throw ParseError(line.number, "player index out of range");
    }
    if (entries[player - 1]) {
      throw ParseError(line.number,
                       "duplicate preference for player " + std::to_string(player));
    }
    const std::string& kind = line.tokens[2];
    if (kind == "total") {
      // Alternating outcome and ">" tokens, best first.
      PreferenceOrder order;
      order.player = player;
      for (size_t i = 3; i < line.tokens.size(); ++i) {
        if ((i - 3) % 2 == 1) {
          if (line.tokens[i] != ">") {
            throw ParseError(line.number, "expected '>' between outcomes");
          }
          continue;
        }
        order.ranking.push_back(outcome_token(line, game, line.tokens[i]));
      }
      if (line.tokens.size() % 2 != 0 || order.ranking.empty()) {
        throw ParseError(line.number, "malformed 'pref' line");
      }
      try {
        compile_total(order, game.num_outcomes());
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
      entries[player - 1] = order;
    } else if (kind == "partial") {
      PartialPreference partial;
      partial.player = player;
      for (size_t i = 3; i < line.tokens.size(); ++i) {
        const std::string& pair = line.tokens[i];
        size_t sep = pair.find('>');
        if (sep == std::string::npos || sep == 0 || sep + 1 == pair.size() ||
            pair.find('>', sep + 1) != std::string::npos) {
          throw ParseError(line.number, "malformed relation pair '" + pair + "'");
        }
        partial.relations.emplace_back(outcome_token(line, game, pair.substr(0, sep)),
                                       outcome_token(line, game, pair.substr(sep + 1)));
      }
      try {
        compile_partial(partial, game.num_outcomes());
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
      entries[player - 1] = partial;
    } else {
      throw ParseError(line.number, "preference must be 'total' or 'partial'");
    }
  }
  std::vector<PlayerPreference> out;
  out.reserve(entries.size());
  for (int i = 0; i < game.num_players(); ++i) {
    if (!entries[i]) {
      throw ParseError(0, "missing preference for player " + std::to_string(i + 1));
    }
    out.push_back(std::move(*entries[i]));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GameForm parse_game_file(const std::string& path) { return parse_game(read_file(path)); }

std::vector<PlayerPreference> parse_preferences_file(const std::string& path,
                                                     const GameForm& game) {
  return parse_preferences(read_file(path), game);
}

}  // namespace cyclegame
