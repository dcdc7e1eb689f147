#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "cyclegame/game_form.hpp"
#include "cyclegame/preferences.hpp"

namespace cyclegame {

// Line-oriented game description:
//
//   players <n>
//   position <name> player <i>
//   terminal <name>
//   edge <from> <to>
//   init <name>
//
// '#' starts a comment, blank lines are skipped, tokens are whitespace
// separated. The first directive must be `players`; vertices must be
// declared before edges or init refer to them; terminal declaration order
// assigns the outcome indices a_1..a_p. Throws ParseError with the offending
// line number on syntax errors (malformed lines) and semantic errors
// (unknown vertices, duplicate declarations, missing init).
GameForm parse_game(std::string_view text);

// Preference lines against a parsed game, one per player:
//
//   pref <i> total <o1> > <o2> > ... > <om>
//   pref <i> partial <x>><y> [<x>><y> ...]
//
// Outcome tokens are terminal names or `c`. Total lines must rank every
// outcome exactly once; partial pairs contain no spaces. Throws ParseError
// on unknown outcomes, player indices out of range, duplicate or missing
// player entries, and cyclic partial relation sets.
std::vector<PlayerPreference> parse_preferences(std::string_view text, const GameForm& game);

GameForm parse_game_file(const std::string& path);
std::vector<PlayerPreference> parse_preferences_file(const std::string& path,
                                                     const GameForm& game);
std::string read_file(const std::string& path);

}  // namespace cyclegame
