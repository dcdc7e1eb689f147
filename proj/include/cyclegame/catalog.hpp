#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclegame/preferences.hpp"

namespace cyclegame {

// The four-person headline game: 8 positions, 5 terminals, 17 edges, one
// dicycle, initial u1, together with the four partial preference orders
// under which no situation is a Nash equilibrium.
struct MainExample {
  GameForm game;
  std::vector<PartialPreference> orders;
};

MainExample main_example();

// Cycle-and-quit game: a directed k-cycle v_1..v_k where each v_j may also
// quit to its own terminal a_j. controllers[j-1] names the player at v_j;
// the caller picks the initial vertex. Requires k >= 2.
GameForm build_gk(int k, std::span<const int> controllers);

// A named game/preference pair, also emittable as canonical text files.
struct CatalogEntry {
  std::string name;
  GameForm game;
  std::vector<PlayerPreference> prefs;
};

// Two-player alternation on the 2-cycle: a Nash equilibrium exists from
// either initial vertex but no situation is subgame perfect.
CatalogEntry g2_example();
// Three players on the 3-cycle with no subgame perfect equilibrium.
CatalogEntry g3_example();
// Two players on the 6-cycle (odd positions player 1, even player 2);
// player 2's preference is a partial order and no extension of it admits a
// subgame perfect equilibrium.
CatalogEntry g6_example();
CatalogEntry main_entry();

std::vector<std::string> catalog_names();
CatalogEntry catalog_entry(std::string_view name);

// Writes <dir>/<name>.game and <dir>/<name>.pref; returns the two paths.
std::vector<std::string> emit_entry(const CatalogEntry& entry, const std::string& dir);

}  // namespace cyclegame
