#include "cyclegame/preferences.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclegame {

bool PreferenceOrder::prefers(Outcome x, Outcome y) const {
  for (Outcome o : ranking) {
    if (o == x) return !(x == y);
    if (o == y) return false;
  }
  return false;
}

int player_of(const PlayerPreference& pref) {
  return std::visit([](const auto& p) { return p.player; }, pref);
}

bool is_total(const PlayerPreference& pref) {
  return std::holds_alternative<PreferenceOrder>(pref);
}

namespace {

int checked_code(Outcome o, int num_outcomes) {
  int code = outcome_code(o, num_outcomes);
  if (code < 0 || code >= num_outcomes) {
    throw std::invalid_argument("outcome index out of range");
  }
  return code;
}

// Transitive closure of the raw relation pairs as bit rows; throws on cycles.
std::vector<uint64_t> closure_of(const PartialPreference& partial, int num_outcomes) {
  if (num_outcomes < 1 || num_outcomes > 64) {
    throw std::invalid_argument("outcome count must be between 1 and 64");
  }
  std::vector<uint64_t> better(num_outcomes, 0);
  for (const auto& [x, y] : partial.relations) {
    better[checked_code(x, num_outcomes)] |= uint64_t{1} << checked_code(y, num_outcomes);
  }
  for (int k = 0; k < num_outcomes; ++k) {
    for (int x = 0; x < num_outcomes; ++x) {
      if ((better[x] >> k) & 1) better[x] |= better[k];
    }
  }
  for (int x = 0; x < num_outcomes; ++x) {
    if ((better[x] >> x) & 1) throw std::invalid_argument("cyclic relation set");
  }
  return better;
}

}  // namespace

PreferenceTable compile_total(const PreferenceOrder& order, int num_outcomes) {
  if (num_outcomes < 1 || num_outcomes > 64) {
    throw std::invalid_argument("outcome count must be between 1 and 64");
  }
  if (static_cast<int>(order.ranking.size()) != num_outcomes) {
    throw std::invalid_argument("total preference must rank every outcome exactly once");
  }
  PreferenceTable table{num_outcomes, std::vector<uint64_t>(num_outcomes, 0)};
  uint64_t worse = 0;  // outcomes ranked below the current one
  for (int i = num_outcomes - 1; i >= 0; --i) {
    int code = checked_code(order.ranking[i], num_outcomes);
    if (table.better[code] != 0 || ((worse >> code) & 1)) {
      throw std::invalid_argument("total preference must rank every outcome exactly once");
    }
    table.better[code] = worse;
    worse |= uint64_t{1} << code;
  }
  if (worse + 1 != (uint64_t{1} << num_outcomes)) {
    throw std::invalid_argument("total preference must rank every outcome exactly once");
  }
  return table;
}

PreferenceTable compile_partial(const PartialPreference& partial, int num_outcomes) {
  return PreferenceTable{num_outcomes, closure_of(partial, num_outcomes)};
}

PreferenceTable compile_preference(const PlayerPreference& pref, int num_outcomes) {
  if (const auto* total = std::get_if<PreferenceOrder>(&pref)) {
    return compile_total(*total, num_outcomes);
  }
  return compile_partial(std::get<PartialPreference>(pref), num_outcomes);
}

std::vector<PreferenceTable> compile_profile(const PreferenceProfile& profile,
                                             int num_outcomes) {
  std::vector<PreferenceTable> tables;
  tables.reserve(profile.size());
  for (size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].player != static_cast<int>(i) + 1) {
      throw std::invalid_argument("preference for player " + std::to_string(i + 1) +
                                  " is missing or out of order");
    }
    tables.push_back(compile_total(profile[i], num_outcomes));
  }
  return tables;
}

std::vector<PreferenceTable> compile_preferences(const std::vector<PlayerPreference>& prefs,
                                                 int num_outcomes) {
  std::vector<PreferenceTable> tables;
  tables.reserve(prefs.size());
  for (size_t i = 0; i < prefs.size(); ++i) {
    if (player_of(prefs[i]) != static_cast<int>(i) + 1) {
      throw std::invalid_argument("preference for player " + std::to_string(i + 1) +
                                  " is missing or out of order");
    }
    tables.push_back(compile_preference(prefs[i], num_outcomes));
  }
  return tables;
}

namespace {

// All topological orders of the strict relation, candidates tried in
// ascending dense code so the output sequence is lexicographic.
void extend(const std::vector<uint64_t>& pred, int num_outcomes, uint64_t remaining,
            std::vector<int>& prefix, long long& count,
            const std::function<void(const std::vector<int>&)>* emit) {
  if (!remaining) {
    ++count;
    if (emit) (*emit)(prefix);
    return;
  }
  for (int x = 0; x < num_outcomes; ++x) {
    if (((remaining >> x) & 1) && (pred[x] & remaining) == 0) {
      prefix.push_back(x);
      extend(pred, num_outcomes, remaining & ~(uint64_t{1} << x), prefix, count, emit);
      prefix.pop_back();
    }
  }
}

void run_extensions(const PartialPreference& partial, int num_outcomes, long long& count,
                    const std::function<void(const std::vector<int>&)>* emit) {
  std::vector<uint64_t> better = closure_of(partial, num_outcomes);
  // pred[x] = outcomes that must be placed before x.
  std::vector<uint64_t> pred(num_outcomes, 0);
  for (int x = 0; x < num_outcomes; ++x) {
    for (int y = 0; y < num_outcomes; ++y) {
      if ((better[x] >> y) & 1) pred[y] |= uint64_t{1} << x;
    }
  }
  uint64_t all = num_outcomes == 64 ? ~uint64_t{0} : (uint64_t{1} << num_outcomes) - 1;
  std::vector<int> prefix;
  prefix.reserve(num_outcomes);
  extend(pred, num_outcomes, all, prefix, count, emit);
}

}  // namespace

void for_each_linear_extension(const PartialPreference& partial, int num_outcomes,
                               const std::function<void(const PreferenceOrder&)>& fn) {
  long long count = 0;
  std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& codes) {
    PreferenceOrder order;
    order.player = partial.player;
    order.ranking.reserve(codes.size());
    for (int code : codes) order.ranking.push_back(outcome_from_code(code, num_outcomes));
    fn(order);
  };
  run_extensions(partial, num_outcomes, count, &emit);
}

std::vector<PreferenceOrder> linear_extensions(const PartialPreference& partial,
                                               int num_outcomes) {
  std::vector<PreferenceOrder> out;
  for_each_linear_extension(partial, num_outcomes,
                            [&](const PreferenceOrder& o) { out.push_back(o); });
  return out;
}

long long count_linear_extensions(const PartialPreference& partial, int num_outcomes) {
  long long count = 0;
  run_extensions(partial, num_outcomes, count, nullptr);
  return count;
}

PartialPreference as_partial(const PlayerPreference& pref) {
  if (const auto* partial = std::get_if<PartialPreference>(&pref)) return *partial;
  const auto& total = std::get<PreferenceOrder>(pref);
  PartialPreference out;
  out.player = total.player;
  for (size_t i = 0; i + 1 < total.ranking.size(); ++i) {
    out.relations.emplace_back(total.ranking[i], total.ranking[i + 1]);
  }
  return out;
}

std::string prefs_to_text(const std::vector<PlayerPreference>& prefs, const GameForm& game) {
  std::ostringstream out;
  for (const PlayerPreference& pref : prefs) {
    if (const auto* total = std::get_if<PreferenceOrder>(&pref)) {
      out << "pref " << total->player << " total";
      for (size_t i = 0; i < total->ranking.size(); ++i) {
        out << (i == 0 ? " " : " > ") << game.outcome_name(total->ranking[i]);
      }
      out << "\n";
    } else {
      const auto& partial = std::get<PartialPreference>(pref);
      out << "pref " << partial.player << " partial";
      for (const auto& [x, y] : partial.relations) {
        out << " " << game.outcome_name(x) << ">" << game.outcome_name(y);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace cyclegame
