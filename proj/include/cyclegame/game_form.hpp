#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cyclegame {

// Outcome of a play: a terminal a_j (1-based j, numbered by declaration
// order) or the shared cycle outcome c. Every dicycle of a game maps to the
// single outcome c.
class Outcome {
 public:
  constexpr Outcome() = default;

  static constexpr Outcome cycle() { return Outcome(); }
  static constexpr Outcome terminal(int j) {
    Outcome o;
    o.code_ = j;
    return o;
  }

  constexpr bool is_cycle() const { return code_ == 0; }
  constexpr bool is_terminal() const { return code_ != 0; }
  // 1-based terminal index; 0 for the cycle outcome.
  constexpr int terminal_index() const { return code_; }

  friend constexpr bool operator==(Outcome, Outcome) = default;

 private:
  int code_ = 0;
};

// Dense code in [0, num_outcomes): terminals a_1..a_p map to 0..p-1, the
// cycle outcome to p. Used for rank tables and deterministic iteration.
inline int outcome_code(Outcome o, int num_outcomes) {
  return o.is_cycle() ? num_outcomes - 1 : o.terminal_index() - 1;
}

inline Outcome outcome_from_code(int code, int num_outcomes) {
  return code == num_outcomes - 1 ? Outcome::cycle() : Outcome::terminal(code + 1);
}

// Token rules shared by vertex declarations and outcome references:
// nonempty, no whitespace, no '>', and "c" is reserved for the cycle outcome.
bool is_valid_vertex_name(std::string_view name);

// A finite positional game form: a digraph whose non-terminal vertices are
// each controlled by one of num_players() players and whose terminal vertices
// are outcomes a_1..a_p in declaration order. Construction goes through the
// add_* methods (the text parser uses the same path); afterwards the object
// is treated as immutable. Structural problems that do not prevent
// construction (sinks, edges out of terminals, duplicate edges, a missing or
// terminal initial vertex, out-of-range controllers) are reported by
// validate() rather than thrown.
class GameForm {
 public:
  explicit GameForm(int num_players);

  void add_position(std::string_view name, int player);
  void add_terminal(std::string_view name);
  void add_edge(std::string_view from, std::string_view to);
  void set_initial(std::string_view name);
  GameForm with_initial(std::string_view name) const;

  int num_players() const { return num_players_; }
  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_terminals() const { return static_cast<int>(terminals_.size()); }
  int num_outcomes() const { return num_terminals() + 1; }

  // Vertex index for a name, -1 if undeclared.
  int find_vertex(std::string_view name) const;
  // As find_vertex but throws std::invalid_argument on unknown names.
  int vertex(std::string_view name) const;
  const std::string& name(int v) const { return names_[v]; }

  bool is_terminal(int v) const { return terminal_rank_[v] != 0; }
  // 1-based a_j index of a terminal, 0 for non-terminals.
  int terminal_rank(int v) const { return terminal_rank_[v]; }
  int terminal_vertex(int j) const { return terminals_[j - 1]; }
  // Controlling player of a position, 0 for terminals.
  int controller(int v) const { return controller_[v]; }

  std::span<const int> successors(int v) const { return succ_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Non-terminal vertices in declaration order.
  std::span<const int> positions() const { return positions_; }
  std::vector<int> positions_of(int player) const;

  bool has_initial() const { return initial_ >= 0; }
  int initial() const { return initial_; }

  // Outcome of a play ending at terminal vertex v.
  Outcome outcome_at(int v) const { return Outcome::terminal(terminal_rank_[v]); }
  std::string outcome_name(Outcome o) const;
  std::optional<Outcome> outcome_by_name(std::string_view token) const;

  // Structural equality on the canonical form: player count, positions with
  // controllers in declaration order, terminals in declaration order, edges
  // in declaration order (all by name), and the initial vertex.
  bool operator==(const GameForm& other) const;

 private:
  int add_vertex(std::string_view name, int controller, int terminal_rank);

  int num_players_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> controller_;
  std::vector<int> terminal_rank_;
  std::vector<int> terminals_;
  std::vector<int> positions_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> succ_;
  int initial_ = -1;
};

// Every violated structural invariant as one message each; empty means valid.
std::vector<std::string> validate(const GameForm& game);

// Canonical text form: players, positions, terminals, edges, init. Parsing
// the result reproduces the game (operator==).
std::string to_text(const GameForm& game);

}  // namespace cyclegame
