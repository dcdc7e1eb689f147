#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "cyclegame/game_form.hpp"

namespace cyclegame {

// A strict total order over all outcomes of a game, best first.
struct PreferenceOrder {
  int player = 0;
  std::vector<Outcome> ranking;

  // True iff x is ranked strictly above y.
  bool prefers(Outcome x, Outcome y) const;
  bool operator==(const PreferenceOrder&) const = default;
};

// A strict partial order given as (better, worse) pairs; the effective
// relation is the transitive closure, which must be acyclic.
struct PartialPreference {
  int player = 0;
  std::vector<std::pair<Outcome, Outcome>> relations;

  bool operator==(const PartialPreference&) const = default;
};

// One total order per player, player i at index i-1.
using PreferenceProfile = std::vector<PreferenceOrder>;

// A player's preference as read from a file: total or partial.
using PlayerPreference = std::variant<PreferenceOrder, PartialPreference>;

int player_of(const PlayerPreference& pref);
bool is_total(const PlayerPreference& pref);

// Compiled strict comparison over dense outcome codes (see outcome_code).
// For totals the relation is complete; for partials it is the transitive
// closure, so a positive answer holds under every agreeing total order.
struct PreferenceTable {
  int num_outcomes = 0;
  std::vector<uint64_t> better;  // bit y of better[x] set iff x is strictly better than y

  bool better_than(int x, int y) const { return (better[x] >> y) & 1; }
};

// Throws std::invalid_argument on an incomplete ranking, an out-of-range
// outcome, or (for partials) a cyclic relation set.
PreferenceTable compile_total(const PreferenceOrder& order, int num_outcomes);
PreferenceTable compile_partial(const PartialPreference& partial, int num_outcomes);
PreferenceTable compile_preference(const PlayerPreference& pref, int num_outcomes);

// Tables for players 1..n in order; each entry's player field must match its
// position.
std::vector<PreferenceTable> compile_profile(const PreferenceProfile& profile,
                                             int num_outcomes);
std::vector<PreferenceTable> compile_preferences(const std::vector<PlayerPreference>& prefs,
                                                 int num_outcomes);

// Every strict total order containing the partial order, emitted best-first
// in lexicographic order of dense outcome codes. Each extension appears
// exactly once.
std::vector<PreferenceOrder> linear_extensions(const PartialPreference& partial,
                                               int num_outcomes);
long long count_linear_extensions(const PartialPreference& partial, int num_outcomes);
void for_each_linear_extension(const PartialPreference& partial, int num_outcomes,
                               const std::function<void(const PreferenceOrder&)>& fn);

// A total order restated as consecutive (better, worse) pairs.
PartialPreference as_partial(const PlayerPreference& pref);

// Canonical preference file text for players 1..n.
std::string prefs_to_text(const std::vector<PlayerPreference>& prefs, const GameForm& game);

}  // namespace cyclegame
