#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclegame/catalog.hpp"
#include "cyclegame/equilibrium.hpp"
#include "cyclegame/errors.hpp"
#include "cyclegame/normal_form.hpp"
#include "cyclegame/parser.hpp"
#include "cyclegame/solvers.hpp"

namespace {

using namespace cyclegame;

// Exit codes: 0 success or property holds, 1 property fails, 2 input error,
// 3 resource bound exceeded.
constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kInputError = 2;
constexpr int kBoundExceeded = 3;

long long max_cells_from_env() {
  const char* raw = std::getenv("CYCLEGAME_MAX_CELLS");
  if (!raw) return kDefaultMaxCells;
  char* end = nullptr;
  long long value = std::strtoll(raw, &end, 10);
  if (!end || *end != '\0' || value < 1) {
    throw std::invalid_argument("invalid CYCLEGAME_MAX_CELLS value");
  }
  return value;
}

std::string game_summary(const GameForm& game) {
  std::string text = std::to_string(game.num_vertices()) + " vertices, " +
                     std::to_string(game.edges().size()) + " edges, " +
                     std::to_string(game.num_players()) + " players";
  if (game.has_initial()) text += ", initial " + game.name(game.initial());
  return text;
}

std::string tuple_text(std::span<const int> tuple) {
  std::string text;
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (!text.empty()) text += " ";
    text += "s" + std::to_string(i + 1) + "_" + std::to_string(tuple[i] + 1);
  }
  return text;
}

int run_validate(const std::string& game_path) {
  GameForm game = parse_game_file(game_path);
  std::vector<std::string> report = validate(game);
  for (const std::string& violation : report) std::cout << violation << "\n";
  if (!report.empty()) return kPropertyFails;
  std::cout << "valid: " << game_summary(game) << "\n";
  return kOk;
}

int run_normal_form(const std::string& game_path, const std::string& pref_path,
                    const std::string& format, const std::string& out_path) {
  GameForm game = parse_game_file(game_path);
  NormalForm nf = build_normal_form(game, max_cells_from_env());
  std::vector<uint32_t> labels;
  bool with_labels = !pref_path.empty();
  if (with_labels) {
    auto prefs = parse_preferences_file(pref_path, game);
    labels = improvement_labels(nf, compile_preferences(prefs, game.num_outcomes()));
  }
  std::string text = format == "md"
                         ? normal_form_markdown(game, nf, with_labels ? &labels : nullptr)
                         : normal_form_csv(game, nf, with_labels ? &labels : nullptr);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    std::cout << "wrote " << out_path << " (" << nf.size() << " situations)\n";
  }
  return kOk;
}

int run_verify_ne_free(const std::string& game_path, const std::string& pref_path,
                       const std::string& mode, long long max_profiles) {
  GameForm game = parse_game_file(game_path);
  auto prefs = parse_preferences_file(pref_path, game);
  NormalForm nf = build_normal_form(game, max_cells_from_env());
  std::cout << "game: " << game_summary(game) << "\n";
  std::cout << "normal form: " << nf.size() << " situations\n";

  bool run_certificate = mode == "certificate" || mode == "both";
  bool run_extensions = mode == "extensions" || mode == "both";
  bool ne_free = true;
  long long profiles = 0;
  long long equilibria = 0;

  if (run_certificate) {
    std::vector<PartialPreference> partials;
    for (const PlayerPreference& pref : prefs) partials.push_back(as_partial(pref));
    CertificateResult cert = verify_ne_free_certificate(nf, partials);
    profiles = cert.report.profile_count;
    equilibria = static_cast<long long>(cert.report.equilibria.size());
    if (cert.certified) {
      std::cout << "certificate: every situation has a nonempty improver set; no "
                   "agreeing total orders admit a Nash equilibrium\n";
    } else {
      ne_free = false;
      std::cout << "certificate: FAILED, " << cert.report.equilibria.size()
                << " situation(s) have an empty improver set, first: "
                << tuple_text(*cert.first_uncertified) << "\n";
    }
  }
  if (run_extensions) {
    NEReport report = verify_ne_free_all_extensions(nf, prefs, max_profiles);
    profiles = report.profile_count;
    equilibria = static_cast<long long>(report.equilibria.size());
    std::cout << "extensions: " << report.profile_count << " total-order profiles, "
              << report.equilibria.size() << " Nash equilibria\n";
    if (!report.ne_free) {
      ne_free = false;
      std::cout << "first equilibrium: " << tuple_text(report.equilibria.front()) << "\n";
    }
  }
  std::cout << "RESULT ne_free=" << (ne_free ? "true" : "false") << " profiles=" << profiles
            << " equilibria=" << equilibria << "\n";
  return ne_free ? kOk : kPropertyFails;
}

int run_spne(const std::string& game_path, const std::string& pref_path,
             long long max_profiles) {
  GameForm game = parse_game_file(game_path);
  auto prefs = parse_preferences_file(pref_path, game);
  std::cout << "game: " << game_summary(game) << "\n";
  bool any_partial = false;
  for (const PlayerPreference& pref : prefs) any_partial |= !is_total(pref);
  if (any_partial) {
    std::cout << "partial preferences are taken as the partial order generated by their "
                 "relation pairs; checking every linear extension\n";
  }
  SpneReport report = subgame_perfect(game, prefs, max_cells_from_env(), max_profiles);
  std::cout << "profiles examined: " << report.profile_count << "\n";
  std::cout << "profiles with a subgame perfect equilibrium: " << report.profiles_with_spne
            << "\n";
  size_t shown = std::min<size_t>(report.witness.size(), 16);
  for (size_t i = 0; i < shown; ++i) {
    std::cout << "subgame perfect: " << tuple_text(report.witness[i]) << "\n";
  }
  if (shown < report.witness.size()) {
    std::cout << "... " << report.witness.size() - shown << " more\n";
  }
  std::cout << "RESULT spne_in_every_profile="
            << (report.spne_in_every_profile() ? "true" : "false")
            << " profiles=" << report.profile_count
            << " profiles_with_spne=" << report.profiles_with_spne << "\n";
  return report.spne_in_every_profile() ? kOk : kPropertyFails;
}

int run_solve_zero_sum(const std::string& game_path, const std::string& win_path) {
  GameForm game = parse_game_file(game_path);
  WinAssignment win = parse_win_assignment(read_file(win_path), game);
  AttractorSolution solution = zero_sum_attractor(game, win);
  for (int side = 1; side <= 2; ++side) {
    const std::vector<int>& set = side == 1 ? solution.v1_set : solution.v2_set;
    std::cout << "v" << side << "_set:";
    for (int v : set) std::cout << " " << game.name(v);
    std::cout << "\n";
  }
  for (int side = 1; side <= 2; ++side) {
    const Strategy& strategy = side == 1 ? solution.strategy1 : solution.strategy2;
    std::cout << "strategy " << side << ":\n";
    for (const auto& [position, successor] : strategy.moves) {
      std::cout << "move " << game.name(position) << " " << game.name(successor) << "\n";
    }
  }
  if (game.has_initial()) {
    std::cout << "winner at " << game.name(game.initial()) << ": "
              << solution.winner_from[game.initial()] << "\n";
  }
  return kOk;
}

int run_backward_induction(const std::string& game_path, const std::string& pref_path) {
  GameForm game = parse_game_file(game_path);
  auto prefs = parse_preferences_file(pref_path, game);
  PreferenceProfile profile;
  for (const PlayerPreference& pref : prefs) {
    if (!is_total(pref)) throw std::invalid_argument("profile not total");
    profile.push_back(std::get<PreferenceOrder>(pref));
  }
  BackwardInductionResult result = backward_induction(game, profile);
  for (const Strategy& strategy : result.situation) {
    std::cout << "player " << strategy.player << ":\n";
    for (const auto& [position, successor] : strategy.moves) {
      std::cout << "move " << game.name(position) << " " << game.name(successor) << "\n";
    }
  }
  if (game.has_initial()) {
    std::cout << "outcome " << game.outcome_name(result.value[game.initial()]) << "\n";
  }
  return kOk;
}

int run_catalog(const std::string& name, const std::string& emit_dir) {
  std::vector<CatalogEntry> entries;
  if (name == "all") {
    for (const std::string& n : catalog_names()) entries.push_back(catalog_entry(n));
  } else {
    entries.push_back(catalog_entry(name));
  }
  for (const CatalogEntry& entry : entries) {
    if (emit_dir.empty()) {
      std::cout << to_text(entry.game) << "\n" << prefs_to_text(entry.prefs, entry.game);
      if (entries.size() > 1) std::cout << "\n";
    } else {
      for (const std::string& path : emit_entry(entry, emit_dir)) {
        std::cout << "wrote " << path << "\n";
      }
    }
  }
  return kOk;
}

// Exhaustive scan over every pair of total orders on the 4-cycle quit game
// with players alternating around the cycle; reports any pair that admits no
// subgame perfect equilibrium.
int run_spne_scan_g4() {
  const int controllers[] = {1, 2, 1, 2};
  GameForm game = build_gk(4, controllers);
  PartialPreference unconstrained1{1, {}};
  PartialPreference unconstrained2{2, {}};
  std::vector<PreferenceOrder> totals1 = linear_extensions(unconstrained1, game.num_outcomes());
  std::vector<PreferenceOrder> totals2 = linear_extensions(unconstrained2, game.num_outcomes());
  long long pairs = 0;
  long long without_spne = 0;
  long long averse_pairs = 0;
  long long averse_without_spne = 0;
  for (const PreferenceOrder& o1 : totals1) {
    std::vector<PreferenceTable> tables(2);
    tables[0] = compile_total(o1, game.num_outcomes());
    for (const PreferenceOrder& o2 : totals2) {
      tables[1] = compile_total(o2, game.num_outcomes());
      ++pairs;
      // Cycle-averse: both players rank playing forever below every terminal.
      bool averse = o1.ranking.back().is_cycle() && o2.ranking.back().is_cycle();
      if (averse) ++averse_pairs;
      if (subgame_perfect_equilibria(game, tables).empty()) {
        ++without_spne;
        if (averse) {
          ++averse_without_spne;
          std::cout << "no subgame perfect equilibrium for cycle-averse pair " << pairs
                    << "\n";
        }
      }
    }
  }
  std::cout << "profile pairs scanned: " << pairs << "\n";
  std::cout << "pairs without a subgame perfect equilibrium: " << without_spne << "\n";
  std::cout << "cycle-averse pairs: " << averse_pairs << "\n";
  std::cout << "cycle-averse pairs without a subgame perfect equilibrium: "
            << averse_without_spne << "\n";
  std::cout << "RESULT spne_in_every_cycle_averse_profile="
            << (averse_without_spne == 0 ? "true" : "false") << " profiles=" << pairs
            << " cycle_averse_profiles=" << averse_pairs
            << " cycle_averse_without_spne=" << averse_without_spne << "\n";
  return averse_without_spne == 0 ? kOk : kPropertyFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers and equilibrium checks for positional games on digraphs"};
  app.require_subcommand(1);

  std::string game_path, pref_path, win_path, out_path, emit_dir, name;
  std::string format = "csv";
  std::string mode = "both";
  long long max_profiles = kDefaultMaxProfiles;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a game file's invariants");
  validate_cmd->add_option("game", game_path, "game file")->required();

  CLI::App* nf_cmd = app.add_subcommand("normal-form", "tabulate outcomes per situation");
  nf_cmd->add_option("game", game_path, "game file")->required();
  nf_cmd->add_option("--labels", pref_path, "preference file for improver labels");
  nf_cmd->add_option("--format", format, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}));
  nf_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify-ne-free", "check that no situation is a Nash equilibrium");
  verify_cmd->add_option("game", game_path, "game file")->required();
  verify_cmd->add_option("prefs", pref_path, "preference file")->required();
  verify_cmd->add_option("--mode", mode, "certificate, extensions, or both")
      ->check(CLI::IsMember({"certificate", "extensions", "both"}));
  verify_cmd->add_option("--max-profiles", max_profiles, "extension profile bound");

  CLI::App* spne_cmd = app.add_subcommand("spne", "search for subgame perfect equilibria");
  spne_cmd->add_option("game", game_path, "game file")->required();
  spne_cmd->add_option("prefs", pref_path, "preference file")->required();
  spne_cmd->add_option("--max-profiles", max_profiles, "extension profile bound");

  CLI::App* zs_cmd =
      app.add_subcommand("solve-zero-sum", "solve a two-person win/lose game");
  zs_cmd->add_option("game", game_path, "game file")->required();
  zs_cmd->add_option("wins", win_path, "win assignment file")->required();

  CLI::App* bi_cmd =
      app.add_subcommand("backward-induction", "optimal play on an acyclic game");
  bi_cmd->add_option("game", game_path, "game file")->required();
  bi_cmd->add_option("prefs", pref_path, "preference file (total orders)")->required();

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "print or emit a built-in game");
  catalog_cmd->add_option("name", name, "main, g2, g3, g6, or all")->required();
  catalog_cmd->add_option("--emit", emit_dir, "write <name>.game and <name>.pref here");

  app.add_subcommand("spne-scan-g4",
                     "scan every total-order pair on the 4-cycle quit game; fails if a "
                     "cycle-averse pair lacks a subgame perfect equilibrium");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(game_path);
    if (nf_cmd->parsed()) return run_normal_form(game_path, pref_path, format, out_path);
    if (verify_cmd->parsed())
      return run_verify_ne_free(game_path, pref_path, mode, max_profiles);
    if (spne_cmd->parsed()) return run_spne(game_path, pref_path, max_profiles);
    if (zs_cmd->parsed()) return run_solve_zero_sum(game_path, win_path);
    if (bi_cmd->parsed()) return run_backward_induction(game_path, pref_path);
    if (catalog_cmd->parsed()) return run_catalog(name, emit_dir);
    return run_spne_scan_g4();
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const CyclicGameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
