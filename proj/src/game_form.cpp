#include "cyclegame/game_form.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyclegame {

bool is_valid_vertex_name(std::string_view name) {
  if (name.empty() || name == "c") return false;
  for (char ch : name) {
    if (ch == '>' || std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

GameForm::GameForm(int num_players) : num_players_(num_players) {
  if (num_players < 1 || num_players > 31) {
    throw std::invalid_argument("player count must be between 1 and 31");
  }
}

int GameForm::add_vertex(std::string_view name, int controller, int terminal_rank) {
  if (!is_valid_vertex_name(name)) {
    throw std::invalid_argument("invalid vertex name '" + std::string(name) + "'");
  }
  if (index_.count(std::string(name))) {
    throw std::invalid_argument("duplicate declaration of '" + std::string(name) + "'");
  }
  int v = static_cast<int>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), v);
  controller_.push_back(controller);
  terminal_rank_.push_back(terminal_rank);
  succ_.emplace_back();
  return v;
}

void GameForm::add_position(std::string_view name, int player) {
  // Out-of-range controllers are representable on purpose; validate() flags
  // them, which keeps corrupted inputs inspectable instead of unconstructible.
  positions_.push_back(add_vertex(name, player, 0));
}

void GameForm::add_terminal(std::string_view name) {
  int v = add_vertex(name, 0, static_cast<int>(terminals_.size()) + 1);
  terminals_.push_back(v);
}

void GameForm::add_edge(std::string_view from, std::string_view to) {
  int u = vertex(from);
  int v = vertex(to);
  edges_.emplace_back(u, v);
  succ_[u].push_back(v);
}

void GameForm::set_initial(std::string_view name) { initial_ = vertex(name); }

GameForm GameForm::with_initial(std::string_view name) const {
  GameForm copy = *this;
  copy.set_initial(name);
  return copy;
}

int GameForm::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

int GameForm::vertex(std::string_view name) const {
  int v = find_vertex(name);
  if (v < 0) throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
  return v;
}

std::vector<int> GameForm::positions_of(int player) const {
  std::vector<int> out;
  for (int v : positions_) {
    if (controller_[v] == player) out.push_back(v);
  }
  return out;
}

std::string GameForm::outcome_name(Outcome o) const {
  return o.is_cycle() ? "c" : names_[terminals_[o.terminal_index() - 1]];
}

std::optional<Outcome> GameForm::outcome_by_name(std::string_view token) const {
  if (token == "c") return Outcome::cycle();
  int v = find_vertex(token);
  if (v < 0 || !is_terminal(v)) return std::nullopt;
  return Outcome::terminal(terminal_rank_[v]);
}

bool GameForm::operator==(const GameForm& other) const {
  if (num_players_ != other.num_players_) return false;
  if (positions_.size() != other.positions_.size()) return false;
  if (terminals_.size() != other.terminals_.size()) return false;
  if (edges_.size() != other.edges_.size()) return false;
  for (size_t i = 0; i < positions_.size(); ++i) {
    int a = positions_[i], b = other.positions_[i];
    if (names_[a] != other.names_[b] || controller_[a] != other.controller_[b]) return false;
  }
  for (size_t i = 0; i < terminals_.size(); ++i) {
    if (names_[terminals_[i]] != other.names_[other.terminals_[i]]) return false;
  }
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (names_[edges_[i].first] != other.names_[other.edges_[i].first] ||
        names_[edges_[i].second] != other.names_[other.edges_[i].second]) {
      return false;
    }
  }
  std::string a_init = initial_ >= 0 ? names_[initial_] : "";
  std::string b_init = other.initial_ >= 0 ? other.names_[other.initial_] : "";
  return a_init == b_init;
}

std::vector<std::string> validate(const GameForm& game) {
  std::vector<std::string> report;
  for (int j = 1; j <= game.num_terminals(); ++j) {
    int t = game.terminal_vertex(j);
    for (int s : game.successors(t)) {
      report.push_back("terminal has out-edge: " + game.name(t) + " -> " + game.name(s));
    }
  }
  for (int v : game.positions()) {
    if (game.successors(v).empty()) {
      report.push_back("position has no out-edge: " + game.name(v));
    }
    int c = game.controller(v);
    if (c < 1 || c > game.num_players()) {
      report.push_back("controller index out of range: " + game.name(v) + " (player " +
                       std::to_string(c) + " of " + std::to_string(game.num_players()) + ")");
    }
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : game.edges()) {
    if (!seen.insert({u, v}).second) {
      report.push_back("duplicate edge: " + game.name(u) + " -> " + game.name(v));
    }
  }
  if (!game.has_initial()) {
    report.push_back("no initial position");
  } else if (game.is_terminal(game.initial())) {
    report.push_back("initial position is a terminal: " + game.name(game.initial()));
  }
  return report;
}

std::string to_text(const GameForm& game) {
  std::ostringstream out;
  out << "players " << game.num_players() << "\n";
  for (int v : game.positions()) {
    out << "position " << game.name(v) << " player " << game.controller(v) << "\n";
  }
  for (int j = 1; j <= game.num_terminals(); ++j) {
    out << "terminal " << game.name(game.terminal_vertex(j)) << "\n";
  }
  for (const auto& [u, v] : game.edges()) {
    out << "edge " << game.name(u) << " " << game.name(v) << "\n";
  }
  if (game.has_initial()) {
    out << "init " << game.name(game.initial()) << "\n";
  }
  return out.str();
}

}  // namespace cyclegame
