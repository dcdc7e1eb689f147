#include "cyclegame/equilibrium.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "cyclegame/errors.hpp"

namespace cyclegame {

namespace {

std::vector<int> cell_codes(const NormalForm& nf) {
  std::vector<int> codes(nf.cells.size());
  for (size_t i = 0; i < nf.cells.size(); ++i) {
    codes[i] = outcome_code(nf.cells[i], nf.num_outcomes);
  }
  return codes;
}

void check_tables(const NormalForm& nf, const std::vector<PreferenceTable>& tables) {
  if (tables.size() != nf.dims.size()) {
    throw std::invalid_argument("one preference table per player required");
  }
  for (const PreferenceTable& t : tables) {
    if (t.num_outcomes != nf.num_outcomes) {
      throw std::invalid_argument("preference table outcome count mismatch");
    }
  }
}

uint32_t mask_at(const NormalForm& nf, const std::vector<int>& codes, long long flat,
                 std::span<const int> tuple, const std::vector<PreferenceTable>& tables,
                 bool stop_at_first) {
  uint32_t mask = 0;
  int base = codes[static_cast<size_t>(flat)];
  for (size_t i = 0; i < nf.dims.size(); ++i) {
    long long line = flat - tuple[i] * nf.strides[i];
    for (int k = 0; k < nf.dims[i]; ++k) {
      if (k == tuple[i]) continue;
      int alt = codes[static_cast<size_t>(line + k * nf.strides[i])];
      if (tables[i].better_than(alt, base)) {
        mask |= uint32_t{1} << i;
        if (stop_at_first) return mask;
        break;
      }
    }
  }
  return mask;
}

}  // namespace

uint32_t improving_mask(const NormalForm& nf, std::span<const int> tuple,
                        const std::vector<PreferenceTable>& tables) {
  check_tables(nf, tables);
  std::vector<int> codes = cell_codes(nf);
  return mask_at(nf, codes, nf.flat_index(tuple), tuple, tables, false);
}

std::vector<int> improving_players(const NormalForm& nf, std::span<const int> tuple,
                                   const std::vector<PreferenceTable>& tables) {
  uint32_t mask = improving_mask(nf, tuple, tables);
  std::vector<int> out;
  for (int player = 1; player <= static_cast<int>(nf.dims.size()); ++player) {
    if ((mask >> (player - 1)) & 1) out.push_back(player);
  }
  return out;
}

std::vector<uint32_t> improvement_labels(const NormalForm& nf,
                                         const std::vector<PreferenceTable>& tables) {
  check_tables(nf, tables);
  std::vector<int> codes = cell_codes(nf);
  std::vector<uint32_t> labels(nf.cells.size());
  std::vector<int> tuple(nf.dims.size(), 0);
  for (long long flat = 0; flat < nf.size(); ++flat) {
    labels[static_cast<size_t>(flat)] = mask_at(nf, codes, flat, tuple, tables, false);
    for (size_t i = 0; i < tuple.size(); ++i) {
      if (++tuple[i] < nf.dims[i]) break;
      tuple[i] = 0;
    }
  }
  return labels;
}

namespace {

std::vector<std::vector<int>> equilibria_of(const NormalForm& nf,
                                            const std::vector<int>& codes,
                                            const std::vector<PreferenceTable>& tables) {
  std::vector<std::vector<int>> found;
  std::vector<int> tuple(nf.dims.size(), 0);
  for (long long flat = 0; flat < nf.size(); ++flat) {
    if (mask_at(nf, codes, flat, tuple, tables, true) == 0) found.push_back(tuple);
    for (size_t i = 0; i < tuple.size(); ++i) {
      if (++tuple[i] < nf.dims[i]) break;
      tuple[i] = 0;
    }
  }
  return found;
}

}  // namespace

NEReport find_nash_equilibria(const NormalForm& nf, const PreferenceProfile& profile) {
  std::vector<PreferenceTable> tables = compile_profile(profile, nf.num_outcomes);
  check_tables(nf, tables);
  NEReport report;
  report.mode = NEReport::Mode::kTotalOrder;
  report.profile_count = 1;
  report.equilibria = equilibria_of(nf, cell_codes(nf), tables);
  report.ne_free = report.equilibria.empty();
  return report;
}

CertificateResult verify_ne_free_certificate(const NormalForm& nf,
                                             const std::vector<PartialPreference>& partials) {
  std::vector<PreferenceTable> tables;
  tables.reserve(partials.size());
  for (size_t i = 0; i < partials.size(); ++i) {
    if (partials[i].player != static_cast<int>(i) + 1) {
      throw std::invalid_argument("preference for player " + std::to_string(i + 1) +
                                  " is missing or out of order");
    }
    tables.push_back(compile_partial(partials[i], nf.num_outcomes));
  }
  CertificateResult result;
  result.labels = improvement_labels(nf, tables);
  result.report.mode = NEReport::Mode::kPartialCertificate;
  result.report.profile_count = 1;
  for (long long flat = 0; flat < nf.size(); ++flat) {
    if (result.labels[static_cast<size_t>(flat)] == 0) {
      result.report.equilibria.push_back(nf.tuple_at(flat));
      if (!result.first_uncertified) result.first_uncertified = nf.tuple_at(flat);
    }
  }
  result.certified = result.report.equilibria.empty();
  result.report.ne_free = result.certified;
  return result;
}

namespace {

// Per-player extension tables plus the profile product, bound-checked before
// any table is materialized.
struct ExtensionSpace {
  std::vector<std::vector<PreferenceTable>> tables;
  long long profile_count = 0;
};

ExtensionSpace extension_space(const std::vector<PlayerPreference>& prefs, int num_outcomes,
                               long long max_profiles) {
  unsigned __int128 product = 1;
  std::vector<long long> counts;
  for (const PlayerPreference& pref : prefs) {
    long long count =
        is_total(pref) ? 1
                       : count_linear_extensions(std::get<PartialPreference>(pref), num_outcomes);
    counts.push_back(count);
    product *= static_cast<unsigned __int128>(count);
  }
  long long total = product > static_cast<unsigned __int128>(LLONG_MAX)
                        ? LLONG_MAX
                        : static_cast<long long>(product);
  if (total > max_profiles) {
    throw SizeLimitError("linear extension profile count too large", total, max_profiles);
  }
  ExtensionSpace space;
  space.profile_count = total;
  for (size_t i = 0; i < prefs.size(); ++i) {
    std::vector<PreferenceTable> per_player;
    if (is_total(prefs[i])) {
      per_player.push_back(compile_total(std::get<PreferenceOrder>(prefs[i]), num_outcomes));
    } else {
      for_each_linear_extension(
          std::get<PartialPreference>(prefs[i]), num_outcomes,
          [&](const PreferenceOrder& order) {
            per_player.push_back(compile_total(order, num_outcomes));
          });
    }
    space.tables.push_back(std::move(per_player));
  }
  return space;
}

void check_players(const std::vector<PlayerPreference>& prefs, int num_players) {
  if (static_cast<int>(prefs.size()) != num_players) {
    throw std::invalid_argument("one preference per player required");
  }
  for (size_t i = 0; i < prefs.size(); ++i) {
    if (player_of(prefs[i]) != static_cast<int>(i) + 1) {
      throw std::invalid_argument("preference for player " + std::to_string(i + 1) +
                                  " is missing or out of order");
    }
  }
}

}  // namespace

NEReport verify_ne_free_all_extensions(const NormalForm& nf,
                                       const std::vector<PlayerPreference>& prefs,
                                       long long max_profiles) {
  check_players(prefs, static_cast<int>(nf.dims.size()));
  ExtensionSpace space = extension_space(prefs, nf.num_outcomes, max_profiles);
  NEReport report;
  report.mode = NEReport::Mode::kAllExtensions;
  report.profile_count = space.profile_count;
  std::vector<int> codes = cell_codes(nf);
  std::vector<size_t> pick(space.tables.size(), 0);
  std::vector<PreferenceTable> tables(space.tables.size());
  for (long long p = 0; p < space.profile_count; ++p) {
    for (size_t i = 0; i < pick.size(); ++i) tables[i] = space.tables[i][pick[i]];
    for (auto& ne : equilibria_of(nf, codes, tables)) {
      report.equilibria.push_back(std::move(ne));
    }
    for (size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < space.tables[i].size()) break;
      pick[i] = 0;
    }
  }
  report.ne_free = report.equilibria.empty();
  return report;
}

namespace {

bool spne_check(const GameForm& game, const std::vector<int>& base_next,
                const std::vector<std::vector<Strategy>>& axes,
                std::span<const int> tuple, const std::vector<PreferenceTable>& tables) {
  std::vector<Outcome> base = outcomes_from_all(game, base_next);
  std::vector<int> next = base_next;
  for (size_t i = 0; i < axes.size(); ++i) {
    const Strategy& current = axes[i][tuple[i]];
    for (const Strategy& alt : axes[i]) {
      if (alt.moves == current.moves) continue;
      for (const auto& [position, successor] : alt.moves) next[position] = successor;
      std::vector<Outcome> deviated = outcomes_from_all(game, next);
      for (int v : game.positions()) {
        if (tables[i].better_than(outcome_code(deviated[v], tables[i].num_outcomes),
                                  outcome_code(base[v], tables[i].num_outcomes))) {
          for (const auto& [position, successor] : current.moves) next[position] = successor;
          return false;
        }
      }
    }
    for (const auto& [position, successor] : current.moves) next[position] = successor;
  }
  return true;
}

}  // namespace

bool is_subgame_perfect(const GameForm& game, const Situation& situation,
                        const std::vector<PreferenceTable>& tables) {
  if (static_cast<int>(tables.size()) != game.num_players()) {
    throw std::invalid_argument("one preference table per player required");
  }
  std::vector<std::vector<Strategy>> axes;
  std::vector<int> tuple;
  for (int player = 1; player <= game.num_players(); ++player) {
    axes.push_back(enumerate_strategies(game, player));
    const Strategy& s = situation[player - 1];
    int found = -1;
    for (size_t k = 0; k < axes.back().size(); ++k) {
      if (axes.back()[k].moves == s.moves) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) throw std::invalid_argument("situation strategy not in enumeration");
    tuple.push_back(found);
  }
  return spne_check(game, situation_next(game, situation), axes, tuple, tables);
}

std::vector<std::vector<int>> subgame_perfect_equilibria(
    const GameForm& game, const std::vector<PreferenceTable>& tables, long long max_cells) {
  if (static_cast<int>(tables.size()) != game.num_players()) {
    throw std::invalid_argument("one preference table per player required");
  }
  unsigned __int128 wide = 1;
  for (int player = 1; player <= game.num_players(); ++player) {
    wide *= static_cast<unsigned __int128>(strategy_count(game, player));
  }
  long long total =
      wide > static_cast<unsigned __int128>(LLONG_MAX) ? LLONG_MAX : static_cast<long long>(wide);
  if (total > max_cells) {
    throw SizeLimitError("situation count too large", total, max_cells);
  }
  std::vector<std::vector<Strategy>> axes;
  for (int player = 1; player <= game.num_players(); ++player) {
    axes.push_back(enumerate_strategies(game, player));
  }
  std::vector<std::vector<int>> found;
  std::vector<int> tuple(axes.size(), 0);
  std::vector<int> next(game.num_vertices(), -1);
  for (long long flat = 0; flat < total; ++flat) {
    for (size_t i = 0; i < axes.size(); ++i) {
      for (const auto& [position, successor] : axes[i][tuple[i]].moves) {
        next[position] = successor;
      }
    }
    if (spne_check(game, next, axes, tuple, tables)) found.push_back(tuple);
    for (size_t i = 0; i < tuple.size(); ++i) {
      if (++tuple[i] < static_cast<int>(axes[i].size())) break;
      tuple[i] = 0;
    }
  }
  return found;
}

SpneReport subgame_perfect(const GameForm& game, const std::vector<PlayerPreference>& prefs,
                           long long max_cells, long long max_profiles) {
  check_players(prefs, game.num_players());
  ExtensionSpace space = extension_space(prefs, game.num_outcomes(), max_profiles);
  SpneReport report;
  report.profile_count = space.profile_count;
  std::vector<size_t> pick(space.tables.size(), 0);
  std::vector<PreferenceTable> tables(space.tables.size());
  for (long long p = 0; p < space.profile_count; ++p) {
    for (size_t i = 0; i < pick.size(); ++i) tables[i] = space.tables[i][pick[i]];
    std::vector<std::vector<int>> found = subgame_perfect_equilibria(game, tables, max_cells);
    if (!found.empty()) {
      if (report.profiles_with_spne == 0) report.witness = std::move(found);
      ++report.profiles_with_spne;
    }
    for (size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < space.tables[i].size()) break;
      pick[i] = 0;
    }
  }
  return report;
}

}  // namespace cyclegame
