#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclegame/normal_form.hpp"
#include "cyclegame/preferences.hpp"

namespace cyclegame {

inline constexpr long long kDefaultMaxProfiles = 1'000'000;

// Player i is improving at a situation iff some unilateral replacement of
// their whole strategy yields an outcome strictly better for them. With a
// partial-order table, a positive answer transfers to every agreeing total
// order. Returns a bitmask (bit i-1 for player i).
uint32_t improving_mask(const NormalForm& nf, std::span<const int> tuple,
                        const std::vector<PreferenceTable>& tables);

// Same test as ascending player indices.
std::vector<int> improving_players(const NormalForm& nf, std::span<const int> tuple,
                                   const std::vector<PreferenceTable>& tables);

// Improver bitmask for every cell, in flat order.
std::vector<uint32_t> improvement_labels(const NormalForm& nf,
                                         const std::vector<PreferenceTable>& tables);

struct NEReport {
  enum class Mode { kTotalOrder, kPartialCertificate, kAllExtensions };
  Mode mode = Mode::kTotalOrder;
  bool ne_free = false;
  long long profile_count = 0;
  // NE situations as 0-based strategy index tuples. In all-extensions mode,
  // every NE of every examined profile, so a situation can repeat.
  std::vector<std::vector<int>> equilibria;
};

// Situations with an empty improving set under the given total orders.
NEReport find_nash_equilibria(const NormalForm& nf, const PreferenceProfile& profile);

struct CertificateResult {
  bool certified = false;
  std::vector<uint32_t> labels;
  // First situation (flat order) with an empty improver set, when any.
  std::optional<std::vector<int>> first_uncertified;
  NEReport report;
};

// Labels every situation against the partial orders. Certification succeeds
// iff every situation has a nonempty improver set; the improvement relation
// then rules out a NE under every combination of agreeing total orders.
CertificateResult verify_ne_free_certificate(const NormalForm& nf,
                                             const std::vector<PartialPreference>& partials);

// Enumerates every combination of linear extensions (a total entry counts as
// its own single extension) and collects the NE of each. Throws
// SizeLimitError naming the profile count when it exceeds max_profiles.
NEReport verify_ne_free_all_extensions(const NormalForm& nf,
                                       const std::vector<PlayerPreference>& prefs,
                                       long long max_profiles = kDefaultMaxProfiles);

// A situation is subgame perfect iff from every non-terminal start vertex no
// player has a unilateral deviation whose play from that start is strictly
// better for them; plays are re-resolved per start and per deviation.
bool is_subgame_perfect(const GameForm& game, const Situation& situation,
                        const std::vector<PreferenceTable>& tables);

// All subgame perfect situations as 0-based strategy index tuples over the
// enumerate_strategies axes. Throws SizeLimitError when the situation count
// exceeds max_cells.
std::vector<std::vector<int>> subgame_perfect_equilibria(
    const GameForm& game, const std::vector<PreferenceTable>& tables,
    long long max_cells = kDefaultMaxCells);

struct SpneReport {
  long long profile_count = 0;
  long long profiles_with_spne = 0;
  // Subgame perfect situations of the first profile that has any.
  std::vector<std::vector<int>> witness;

  bool spne_free() const { return profiles_with_spne == 0; }
  bool spne_in_every_profile() const { return profiles_with_spne == profile_count; }
};

// Runs the subgame perfect search for every combination of linear extensions
// of the given preferences.
SpneReport subgame_perfect(const GameForm& game, const std::vector<PlayerPreference>& prefs,
                           long long max_cells = kDefaultMaxCells,
                           long long max_profiles = kDefaultMaxProfiles);

}  // namespace cyclegame
